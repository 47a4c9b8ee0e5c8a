//! Explicit permutation modules on tabloid bases.
//!
//! A tabloid for a composition `ν` of `n` is an assignment of the values
//! `1..n` to rows with exactly `ν_i` values in row `i`.  Tabloids are
//! indexed by a multinomial ranking, so vectors in `M^ν` are sparse sorted
//! lists of `u64` indices (GF(2) coefficients are implicit).  Everything
//! here is independent of the symbolic calculus: maps are *applied* to
//! basis tabloids by brute-force enumeration of choices.

use crate::partition::{multinomial, Composition, Partition};
use crate::tableau::{Entry, Tableau};
use crate::{Error, Result};

/// Resource guard: explicit permutation modules stop at this many boxes.
pub const MAX_N: usize = 14;

/// A tabloid as a row assignment: `row_of[i]` is the 0-based row holding
/// the value `i+1`.
pub type RowAssign = Vec<u8>;

/// The permutation module `M^ν` with its canonical tabloid indexing.
#[derive(Clone)]
pub struct TabloidSpace {
    ctype: Composition,
    n: usize,
    dim: u64,
}

impl TabloidSpace {
    pub fn new(ctype: &Composition) -> Result<TabloidSpace> {
        let n = ctype.n();
        if n > MAX_N {
            return Err(Error::Guard(format!(
                "permutation module for {ctype:?} needs n = {n} > {MAX_N}"
            )));
        }
        let dim = multinomial(ctype.parts());
        assert!(u64::try_from(dim).is_ok());
        Ok(TabloidSpace {
            ctype: ctype.clone(),
            n,
            dim: dim as u64,
        })
    }

    pub fn ctype(&self) -> &Composition {
        &self.ctype
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    fn check_assign(&self, a: &RowAssign) {
        debug_assert_eq!(a.len(), self.n);
        debug_assert!((0..self.ctype.len()).all(|r| {
            a.iter().filter(|&&x| x as usize == r).count() == self.ctype.get(r)
        }));
    }

    /// Multinomial rank of a row assignment: values are placed in order
    /// 1..n; each step counts the arrangements that chose a smaller row.
    pub fn rank(&self, a: &RowAssign) -> u64 {
        self.check_assign(a);
        let mut caps: Vec<usize> = (0..self.ctype.len()).map(|r| self.ctype.get(r)).collect();
        let mut left = self.n;
        let mut idx: u128 = 0;
        for &row in a {
            let row = row as usize;
            left -= 1;
            for r in 0..row {
                if caps[r] > 0 {
                    caps[r] -= 1;
                    idx += arrangements(left, &caps);
                    caps[r] += 1;
                }
            }
            caps[row] -= 1;
        }
        idx as u64
    }

    pub fn unrank(&self, mut idx: u64) -> RowAssign {
        assert!(idx < self.dim);
        let mut caps: Vec<usize> = (0..self.ctype.len()).map(|r| self.ctype.get(r)).collect();
        let mut left = self.n;
        let mut out = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            left -= 1;
            let mut chosen = None;
            for r in 0..caps.len() {
                if caps[r] == 0 {
                    continue;
                }
                caps[r] -= 1;
                let block = arrangements(left, &caps) as u64;
                if idx < block {
                    chosen = Some(r);
                    break;
                }
                idx -= block;
                caps[r] += 1;
            }
            out.push(chosen.expect("rank within dimension") as u8);
        }
        out
    }

    /// Index image of the adjacent transposition swapping values k, k+1
    /// (1-based, `1 ≤ k < n`).
    pub fn transpose_apply(&self, k: usize, idx: u64) -> u64 {
        debug_assert!(k >= 1 && k < self.n);
        let mut a = self.unrank(idx);
        a.swap(k - 1, k);
        self.rank(&a)
    }

    /// The full permutation vector of s_k on the tabloid basis.
    pub fn transpose_perm(&self, k: usize) -> Vec<u32> {
        assert!(self.dim <= u32::MAX as u64, "dense permutation too large");
        (0..self.dim).map(|i| self.transpose_apply(k, i) as u32).collect()
    }
}

fn arrangements(left: usize, caps: &[usize]) -> u128 {
    debug_assert_eq!(left, caps.iter().sum::<usize>());
    multinomial(caps)
}

/// XOR-merge two sorted index lists (symmetric difference).
pub fn xor_merge<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sort an unsorted index list and keep entries of odd multiplicity.
pub fn normalize(mut items: Vec<u64>) -> Vec<u64> {
    items.sort_unstable();
    let mut out = Vec::with_capacity(items.len());
    let mut i = 0;
    while i < items.len() {
        let v = items[i];
        let mut cnt = 0;
        while i < items.len() && items[i] == v {
            cnt += 1;
            i += 1;
        }
        if cnt % 2 == 1 {
            out.push(v);
        }
    }
    out
}

/// The polytabloid of a standard tableau: the GF(2) sum of the tabloids
/// obtained from all products of column permutations (signs collapse in
/// characteristic 2).
pub fn polytabloid(space: &TabloidSpace, t: &Tableau) -> Vec<u64> {
    let n = space.n();
    assert_eq!(t.n(), n);
    assert!(t.is_standard(), "polytabloids are indexed by standard tableaux");
    assert_eq!(&Composition::from(&t.shape()), space.ctype());

    // Columns as value lists top to bottom.
    let shape = t.shape();
    let ncols = shape.get(0);
    let mut cols: Vec<Vec<Entry>> = vec![Vec::new(); ncols];
    for r in 0..t.num_rows() {
        for (c, &v) in t.row(r).iter().enumerate() {
            cols[c].push(v);
        }
    }

    let mut terms: Vec<u64> = Vec::new();
    let mut assign: RowAssign = vec![0; n];
    fn rec(
        space: &TabloidSpace,
        cols: &[Vec<Entry>],
        c: usize,
        assign: &mut RowAssign,
        terms: &mut Vec<u64>,
    ) {
        if c == cols.len() {
            terms.push(space.rank(assign));
            return;
        }
        let col = &cols[c];
        let mut rows: Vec<u8> = (0..col.len() as u8).collect();
        permute_all(&mut rows, 0, &mut |perm| {
            for (i, &v) in col.iter().enumerate() {
                assign[v as usize - 1] = perm[i];
            }
            rec(space, cols, c + 1, assign, terms);
        });
    }
    rec(space, &cols, 0, &mut assign, &mut terms);
    // Distinct column choices give distinct tabloids, but keep the
    // normalization defensive.
    normalize(terms)
}

fn permute_all(items: &mut [u8], k: usize, f: &mut impl FnMut(&[u8])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Apply the tableau homomorphism `Θ_T : M^μ → M^λ` (T of shape μ, type λ)
/// to a single source tabloid: distribute the values of source row `i` to
/// target rows according to the content of row `i` of `T`, summed over all
/// choices.
pub fn theta_apply(
    t: &Tableau,
    src: &TabloidSpace,
    dst: &TabloidSpace,
    idx: u64,
) -> Vec<u64> {
    debug_assert_eq!(&Composition::from(&t.shape()), src.ctype());
    let a = src.unrank(idx);
    let nrows = t.num_rows();
    // Values in each source row.
    let mut row_vals: Vec<Vec<usize>> = vec![Vec::new(); nrows];
    for (v0, &r) in a.iter().enumerate() {
        row_vals[r as usize].push(v0);
    }
    // Needed counts per (source row, target row).
    let tlen = dst.ctype().len();
    let needs: Vec<Vec<usize>> = (0..nrows)
        .map(|i| (0..tlen).map(|j| t.count_in_row(i, (j + 1) as Entry)).collect())
        .collect();

    let mut out: RowAssign = vec![0; src.n()];
    let mut terms: Vec<u64> = Vec::new();
    fn rec(
        dst: &TabloidSpace,
        row_vals: &[Vec<usize>],
        needs: &mut [Vec<usize>],
        i: usize,
        pos: usize,
        out: &mut RowAssign,
        terms: &mut Vec<u64>,
    ) {
        if i == row_vals.len() {
            terms.push(dst.rank(out));
            return;
        }
        if pos == row_vals[i].len() {
            rec(dst, row_vals, needs, i + 1, 0, out, terms);
            return;
        }
        let v0 = row_vals[i][pos];
        for j in 0..needs[i].len() {
            if needs[i][j] == 0 {
                continue;
            }
            needs[i][j] -= 1;
            out[v0] = j as u8;
            rec(dst, row_vals, needs, i, pos + 1, out, terms);
            needs[i][j] += 1;
        }
    }
    let mut needs = needs;
    rec(dst, &row_vals, &mut needs, 0, 0, &mut out, &mut terms);
    normalize(terms)
}

/// Apply `ψ_{d,t} : M^λ → M^ν` to a single tabloid: move `t` of the values
/// in row `d+1` up to row `d`, summed over all choices (`d` 1-based).
pub fn psi_apply(
    d: usize,
    t: usize,
    src: &TabloidSpace,
    dst: &TabloidSpace,
    idx: u64,
) -> Vec<u64> {
    assert!(d >= 1 && t >= 1);
    debug_assert_eq!(dst.ctype().get(d - 1), src.ctype().get(d - 1) + t);
    debug_assert_eq!(dst.ctype().get(d), src.ctype().get(d) - t);
    let a = src.unrank(idx);
    let movers: Vec<usize> = (0..a.len()).filter(|&v0| a[v0] as usize == d).collect();
    assert!(movers.len() >= t);
    let mut terms = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        dst: &TabloidSpace,
        a: &RowAssign,
        movers: &[usize],
        start: usize,
        t: usize,
        d: usize,
        chosen: &mut Vec<usize>,
        terms: &mut Vec<u64>,
    ) {
        if chosen.len() == t {
            let mut b = a.clone();
            for &v0 in chosen.iter() {
                b[v0] = (d - 1) as u8;
            }
            terms.push(dst.rank(&b));
            return;
        }
        for i in start..movers.len() {
            chosen.push(movers[i]);
            rec(dst, a, movers, i + 1, t, d, chosen, terms);
            chosen.pop();
        }
    }
    rec(dst, &a, &movers, 0, t, d, &mut chosen, &mut terms);
    normalize(terms)
}

/// The codomain type of `ψ_{d,t}` on `λ`.
pub fn psi_codomain(lambda: &Composition, d: usize, t: usize) -> Composition {
    let mut nu = lambda.parts().to_vec();
    assert!(d >= 1 && nu.len() > d && nu[d] >= t);
    nu[d - 1] += t;
    nu[d] -= t;
    Composition::new(nu)
}

/// Dense matrix of `Θ_T : M^μ → M^λ` (rows = source tabloids, columns =
/// target tabloids; a map sends row vectors `v ↦ v·A`).
pub fn theta_matrix(t: &Tableau, src: &TabloidSpace, dst: &TabloidSpace) -> crate::GF2Matrix {
    let mut m = crate::GF2Matrix::zero(src.dim() as usize, dst.dim() as usize);
    for i in 0..src.dim() {
        for j in theta_apply(t, src, dst, i) {
            m.set(i as usize, j as usize, true);
        }
    }
    m
}

/// Dense matrix of `ψ_{d,t} : M^λ → M^ν` on tabloid bases.
pub fn psi_matrix(d: usize, t: usize, src: &TabloidSpace, dst: &TabloidSpace) -> crate::GF2Matrix {
    let mut m = crate::GF2Matrix::zero(src.dim() as usize, dst.dim() as usize);
    for i in 0..src.dim() {
        for j in psi_apply(d, t, src, dst, i) {
            m.set(i as usize, j as usize, true);
        }
    }
    m
}

/// Sparse application of a whole [`crate::GF2Combo`] to a sparse vector:
/// the sum of `Θ_T(v)` over the support.
pub fn combo_apply(
    combo: &crate::GF2Combo,
    src: &TabloidSpace,
    dst: &TabloidSpace,
    vec: &[u64],
) -> Vec<u64> {
    let mut acc: Vec<u64> = Vec::new();
    for t in combo.support() {
        for &idx in vec {
            acc = xor_merge(&acc, &theta_apply(t, src, dst, idx));
        }
    }
    acc
}

/// Sparse ψ image of a sparse vector.
pub fn psi_apply_vec(
    d: usize,
    t: usize,
    src: &TabloidSpace,
    dst: &TabloidSpace,
    vec: &[u64],
) -> Vec<u64> {
    let mut acc: Vec<u64> = Vec::new();
    for &idx in vec {
        acc = xor_merge(&acc, &psi_apply(d, t, src, dst, idx));
    }
    acc
}

/// Is the sparse vector in the kernel of every `ψ_{d,t}` — i.e. in the
/// Specht submodule `S^λ ⊆ M^λ`?  `λ` must be a partition.
pub fn kit_member(lambda: &Partition, space: &TabloidSpace, vec: &[u64]) -> bool {
    for d in 1..lambda.len() {
        for t in 1..=lambda.get(d) {
            let nu = psi_codomain(&Composition::from(lambda), d, t);
            let dst = TabloidSpace::new(&nu).expect("same n");
            if !psi_apply_vec(d, t, space, &dst, vec).is_empty() {
                return false;
            }
        }
    }
    true
}
