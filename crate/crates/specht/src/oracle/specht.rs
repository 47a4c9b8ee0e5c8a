//! Specht submodules realized explicitly inside permutation modules.
//!
//! `S^λ ⊆ M^λ` is the row space of the polytabloids of standard tableaux;
//! those rows are independent, so they are a basis and every vector of
//! `S^λ` has canonical coordinates over the standard tableaux.  This is
//! the ground-truth realization: the abstract representations and the
//! kernel-intersection subspace are both checked against it.

use super::tabloid::{polytabloid, psi_codomain, psi_matrix, TabloidSpace};
use crate::gf2::{bit_flip, words_for, RowBasis};
use crate::partition::{Composition, Partition};
use crate::tableau::Tableau;
use crate::{Error, GF2Matrix, Result};

/// Guard for dense ambient computations (bits per row of the basis matrix).
pub const AMBIENT_MAX_DIM: u64 = 60_000;

pub struct SpechtSubspace {
    lambda: Partition,
    space: TabloidSpace,
    standard: Vec<Tableau>,
    basis: RowBasis,
}

impl SpechtSubspace {
    pub fn new(lambda: &Partition) -> Result<SpechtSubspace> {
        let space = TabloidSpace::new(&Composition::from(lambda))?;
        if space.dim() > AMBIENT_MAX_DIM {
            return Err(Error::Guard(format!(
                "dense ambient for {lambda} has dimension {} > {AMBIENT_MAX_DIM}",
                space.dim()
            )));
        }
        let standard = Tableau::standard(lambda);
        let wpr = words_for(space.dim() as usize);
        let mut rows = GF2Matrix::with_cols(space.dim() as usize);
        for t in &standard {
            let mut words = vec![0u64; wpr];
            for idx in polytabloid(&space, t) {
                bit_flip(&mut words, idx as usize);
            }
            rows.push_row(&words);
        }
        let basis = RowBasis::new(&rows);
        assert_eq!(
            basis.rank() as u128,
            lambda.hook_dim(),
            "standard polytabloids of {lambda} must be a basis"
        );
        Ok(SpechtSubspace {
            lambda: lambda.clone(),
            space,
            standard,
            basis,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn ambient(&self) -> &TabloidSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn standard_tableaux(&self) -> &[Tableau] {
        &self.standard
    }

    /// Dense ambient row of the `i`-th standard polytabloid.
    pub fn basis_row(&self, i: usize) -> Vec<u64> {
        let wpr = words_for(self.space.dim() as usize);
        let mut words = vec![0u64; wpr];
        for idx in polytabloid(&self.space, &self.standard[i]) {
            bit_flip(&mut words, idx as usize);
        }
        words
    }

    pub fn contains_dense(&self, v: &[u64]) -> bool {
        self.basis.contains(v)
    }

    pub fn contains_sparse(&self, v: &[u64]) -> bool {
        self.contains_dense(&self.densify(v))
    }

    pub fn densify(&self, sparse: &[u64]) -> Vec<u64> {
        let mut words = vec![0u64; words_for(self.space.dim() as usize)];
        for &idx in sparse {
            bit_flip(&mut words, idx as usize);
        }
        words
    }

    /// Coordinates of an ambient vector over the standard polytabloids.
    pub fn coords_dense(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.basis.coords(v)
    }

    /// The matrices of the adjacent transpositions restricted to `S^λ`,
    /// in standard-polytabloid coordinates (rows transform as `v ↦ v·G`).
    pub fn restricted_gens(&self) -> Vec<GF2Matrix> {
        let n = self.space.n();
        let dim = self.dim();
        let mut out = Vec::with_capacity(n - 1);
        for k in 1..n {
            let perm = self.space.transpose_perm(k);
            let mut g = GF2Matrix::zero(dim, dim);
            for i in 0..dim {
                let row = self.basis_row(i);
                let mut moved = vec![0u64; row.len()];
                for idx in crate::gf2::set_bits(&row) {
                    bit_flip(&mut moved, perm[idx] as usize);
                }
                let coords = self
                    .coords_dense(&moved)
                    .expect("S^lambda is closed under the group action");
                for (w, &word) in coords.iter().enumerate() {
                    let mut word = word;
                    while word != 0 {
                        let b = word.trailing_zeros() as usize;
                        g.set(i, w * 64 + b, true);
                        word &= word - 1;
                    }
                }
            }
            out.push(g);
        }
        out
    }
}

/// The intersection of the kernels of every admissible `ψ_{d,t}`, as a row
/// space inside `M^λ`.  The kernel intersection theorem asserts this equals
/// `S^λ`; the comparison is a test, not an assumption.
pub fn kit_subspace(lambda: &Partition) -> Result<GF2Matrix> {
    let lam_comp = Composition::from(lambda);
    let src = TabloidSpace::new(&lam_comp)?;
    if src.dim() > 6_000 {
        return Err(Error::Guard(format!(
            "kernel intersection for {lambda} needs a {}-dimensional stacked matrix",
            src.dim()
        )));
    }
    // Stack all psi matrices horizontally: v is in the intersection of the
    // kernels iff v · [A_1 | A_2 | …] = 0.
    let mut total_cols = 0usize;
    let mut mats = Vec::new();
    for d in 1..lambda.len() {
        for t in 1..=lambda.get(d) {
            let dst = TabloidSpace::new(&psi_codomain(&lam_comp, d, t))?;
            let m = psi_matrix(d, t, &src, &dst);
            total_cols += m.cols();
            mats.push(m);
        }
    }
    let rows = src.dim() as usize;
    let mut stacked = GF2Matrix::zero(rows, total_cols.max(1));
    let mut off = 0;
    for m in &mats {
        for i in 0..rows {
            for j in crate::gf2::set_bits(m.row(i)) {
                stacked.set(i, off + j, true);
            }
        }
        off += m.cols();
    }
    Ok(stacked.left_nullspace())
}

/// Row-space equality of two collections of ambient vectors.
pub fn same_row_space(a: &GF2Matrix, b: &GF2Matrix) -> bool {
    assert_eq!(a.cols(), b.cols());
    let ra = RowBasis::new(a);
    let rb = RowBasis::new(b);
    ra.rank() == rb.rank()
        && (0..b.rows()).all(|i| ra.contains(b.row(i)))
}
