//! Spinning a cyclic vector and solving for equivariant maps.
//!
//! Given a module with generator matrices `G_1, …, G_{n-1}` and a cyclic
//! vector `w_0`, a breadth-first closure produces a basis `w_0, …, w_{D-1}`
//! together with a complete multiplication log: every product `w_i · G_k`
//! is either a later basis vector (a *tree edge*) or a recorded linear
//! combination of basis vectors (a *dependency*).
//!
//! An equivariant map `Φ` into a second module with matrices `H_k` is then
//! determined by `y_0 = Φ(w_0)`: tree edges force `Φ(w_i) = y_0 · P_i`
//! where `P_i` is the product of the `H_k` along the path from the root,
//! and every dependency imposes linear constraints on `y_0`.  The solution
//! space of those constraints is exactly `Hom(source, target)`, because the
//! log covers all products `w_i · G_k`.

use rayon::prelude::*;

use super::rep::SpechtRep;
use crate::gf2::{bit_flip, bit_get, bit_set, is_zero, set_bits, words_for, xor_into};
use crate::GF2Matrix;

/// One recorded relation `w_node · G_gen = Σ_i coords_i · w_i`.
struct Dep {
    node: u32,
    gen: u32,
    coords: Vec<u64>,
}

/// The full multiplication log of a spin closure.
pub struct SpinEvents {
    dim: usize,
    /// Row `i` is the spin vector `w_i`, in source-module coordinates.
    vectors: GF2Matrix,
    /// `parents[i - 1] = (p, k)` when `w_i = w_p · G_{k+1}`.
    parents: Vec<(u32, u32)>,
    deps: Vec<Dep>,
}

/// Gaussian elimination that grows one vector at a time, optionally
/// remembering how each echelon row decomposes over the inserted vectors.
struct IncrementalBasis {
    cap_words: usize,
    track: bool,
    ech: Vec<Vec<u64>>,
    tr: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

enum Insert {
    Independent,
    Dependent(Vec<u64>),
}

impl IncrementalBasis {
    fn new(capacity: usize, track: bool) -> IncrementalBasis {
        IncrementalBasis {
            cap_words: words_for(capacity.max(1)),
            track,
            ech: Vec::new(),
            tr: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Offer the next vector.  `Dependent` carries its coordinates over the
    /// vectors that were accepted as basis rows so far (only when tracking).
    fn insert(&mut self, v: &[u64]) -> Insert {
        let mut w = v.to_vec();
        let mut c = if self.track {
            vec![0u64; self.cap_words]
        } else {
            Vec::new()
        };
        for (r, &p) in self.pivots.iter().enumerate() {
            if bit_get(&w, p) {
                xor_into(&mut w, &self.ech[r]);
                if self.track {
                    xor_into(&mut c, &self.tr[r]);
                }
            }
        }
        if is_zero(&w) {
            return Insert::Dependent(c);
        }
        let pivot = set_bits(&w).next().unwrap();
        if self.track {
            bit_flip(&mut c, self.pivots.len());
            self.tr.push(c);
        }
        self.pivots.push(pivot);
        self.ech.push(w);
        Insert::Independent
    }
}

/// Breadth-first closure of `v0` under the generator action.  Returns the
/// multiplication log when `v0` is cyclic, `None` otherwise.
pub fn spin(rep: &SpechtRep, v0: &[u64]) -> Option<SpinEvents> {
    let dim = rep.dim();
    let mut basis = IncrementalBasis::new(dim, true);
    match basis.insert(v0) {
        Insert::Independent => {}
        Insert::Dependent(_) => return None,
    }
    let mut vectors = GF2Matrix::with_cols(dim);
    vectors.push_row(v0);
    let mut parents: Vec<(u32, u32)> = Vec::new();
    let mut deps: Vec<Dep> = Vec::new();
    let mut cur = 0usize;
    while cur < vectors.rows() {
        for k in 0..rep.num_gens() as u32 {
            // Applying the edge generator walks straight back to the parent;
            // the constraint it would record holds identically because the
            // generators are involutions.
            if cur > 0 && parents[cur - 1].1 == k {
                continue;
            }
            let v = rep.apply_gen(k as usize, vectors.row(cur));
            match basis.insert(&v) {
                Insert::Independent => {
                    parents.push((cur as u32, k));
                    vectors.push_row(&v);
                }
                Insert::Dependent(coords) => deps.push(Dep {
                    node: cur as u32,
                    gen: k,
                    coords,
                }),
            }
        }
        cur += 1;
    }
    (vectors.rows() == dim).then_some(SpinEvents {
        dim,
        vectors,
        parents,
        deps,
    })
}

/// Rank of the submodule generated by `v0` (no logging).
pub fn spin_rank(rep: &SpechtRep, v0: &[u64]) -> usize {
    let dim = rep.dim();
    let mut basis = IncrementalBasis::new(dim, false);
    if matches!(basis.insert(v0), Insert::Dependent(_)) {
        return 0;
    }
    let mut vectors = GF2Matrix::with_cols(dim);
    vectors.push_row(v0);
    let mut parent_gen: Vec<u32> = vec![u32::MAX];
    let mut cur = 0usize;
    while cur < vectors.rows() && vectors.rows() < dim {
        for k in 0..rep.num_gens() as u32 {
            if parent_gen[cur] == k {
                continue;
            }
            let v = rep.apply_gen(k as usize, vectors.row(cur));
            if matches!(basis.insert(&v), Insert::Independent) {
                parent_gen.push(k);
                vectors.push_row(&v);
            }
        }
        cur += 1;
    }
    basis.rank()
}

/// Search for a cyclic vector: unit vectors in index order, then seeded
/// random vectors.  Specht modules and their duals are always cyclic, so
/// the search is expected to succeed quickly; it gives up after a fixed
/// budget rather than looping forever.
pub fn find_cyclic_generator(rep: &SpechtRep) -> Vec<u64> {
    use rand::{Rng, SeedableRng};
    let dim = rep.dim();
    let words = rep.words();
    for i in 0..dim.min(16) {
        let mut v = vec![0u64; words];
        bit_flip(&mut v, i);
        if spin_rank(rep, &v) == dim {
            return v;
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..48 {
        let mut v = vec![0u64; words];
        for i in 0..dim {
            if rng.gen_bool(0.5) {
                bit_set(&mut v, i);
            }
        }
        if !is_zero(&v) && spin_rank(rep, &v) == dim {
            return v;
        }
    }
    panic!("no cyclic vector found for a {dim}-dimensional module");
}

impl SpinEvents {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &GF2Matrix {
        &self.vectors
    }

    /// Path products `P_i` over the target generators: `P_0 = I` and
    /// `P_child = P_parent · H_k` along tree edges.
    fn propagate(&self, tgt_gens: &[GF2Matrix]) -> Vec<GF2Matrix> {
        let d = tgt_gens[0].rows();
        let mut p = Vec::with_capacity(self.dim);
        p.push(GF2Matrix::identity(d));
        for &(parent, k) in &self.parents {
            let m = p[parent as usize].mul(&tgt_gens[k as usize]);
            p.push(m);
        }
        p
    }

    /// Rows spanning the space of admissible `y_0 = Φ(w_0)`.
    fn solve_y0(&self, tgt_gens: &[GF2Matrix]) -> GF2Matrix {
        let d = tgt_gens[0].rows();
        let p = self.propagate(tgt_gens);
        // Every dependency w_node·G_k = Σ coords_i w_i forces
        //   y_0 · (P_node H_k + Σ coords_i P_i) = 0,
        // i.e. each column of that matrix is a linear constraint on y_0.
        let mut global = IncrementalBasis::new(d, false);
        let chunks: Vec<&[Dep]> = self.deps.chunks(256).collect();
        let mut remaining = chunks.into_iter();
        'outer: loop {
            let batch: Vec<&[Dep]> = remaining.by_ref().take(rayon::current_num_threads()).collect();
            if batch.is_empty() {
                break;
            }
            let partials: Vec<Vec<Vec<u64>>> = batch
                .par_iter()
                .map(|chunk| {
                    let mut local = IncrementalBasis::new(d, false);
                    for dep in *chunk {
                        let mut c = p[dep.node as usize].mul(&tgt_gens[dep.gen as usize]);
                        for i in set_bits(&dep.coords) {
                            c.add_assign(&p[i]);
                        }
                        let ct = c.transpose();
                        for r in 0..ct.rows() {
                            if !is_zero(ct.row(r)) {
                                local.insert(ct.row(r));
                            }
                        }
                    }
                    local.ech
                })
                .collect();
            for rows in partials {
                for row in rows {
                    global.insert(&row);
                }
                if global.rank() == d {
                    // The constraints already force y_0 = 0; further
                    // dependencies cannot change the (empty) solution set.
                    break 'outer;
                }
            }
        }
        let mut cmat = GF2Matrix::with_cols(d);
        for row in &global.ech {
            cmat.push_row(row);
        }
        if cmat.rows() == 0 {
            return GF2Matrix::identity(d);
        }
        cmat.nullspace()
    }

    /// Dimension of the space of equivariant maps into the target module.
    pub fn hom_dim(&self, tgt_gens: &[GF2Matrix]) -> usize {
        self.solve_y0(tgt_gens).rows()
    }

    /// Basis of the space of equivariant maps, as matrices over the
    /// original source basis (rows map as `v ↦ v·M`).
    pub fn hom_solve(&self, tgt_gens: &[GF2Matrix]) -> Vec<GF2Matrix> {
        let y0s = self.solve_y0(tgt_gens);
        if y0s.rows() == 0 {
            return Vec::new();
        }
        let p = self.propagate(tgt_gens);
        let t = self
            .vectors
            .inverse()
            .expect("spin vectors form a basis");
        let d = tgt_gens[0].rows();
        (0..y0s.rows())
            .map(|s| {
                let y0 = y0s.row(s);
                let mut y = GF2Matrix::with_cols(d);
                for pi in &p {
                    y.push_row(&pi.vec_mul(y0));
                }
                t.mul(&y)
            })
            .collect()
    }
}
