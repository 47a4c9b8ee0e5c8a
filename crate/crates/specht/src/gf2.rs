//! Dense, bit-packed linear algebra over GF(2).
//!
//! Rows live in `u64` words, bit `j` of a row sitting at word `j / 64`,
//! position `j % 64`.  Everything here is plain Gaussian elimination; the
//! only concession to scale is that row operations are whole-word XORs and
//! matrix products walk set bits instead of columns.

use rayon::prelude::*;

/// Number of `u64` words needed to hold `bits` bits.
#[inline]
pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub fn bit_get(words: &[u64], i: usize) -> bool {
    (words[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
pub fn bit_set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

#[inline]
pub fn bit_flip(words: &mut [u64], i: usize) {
    words[i / 64] ^= 1 << (i % 64);
}

/// `dst ^= src` elementwise.
#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

#[inline]
pub fn is_zero(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// GF(2) inner product of two bit vectors.
#[inline]
pub fn dot(a: &[u64], b: &[u64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum::<u32>() & 1 == 1
}

/// Iterator over the indices of set bits in a word slice.
pub fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words
        .iter()
        .enumerate()
        .flat_map(|(w, &word)| BitIter { word, base: w * 64 })
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let t = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + t)
    }
}

/// Dense GF(2) matrix, rows bit-packed into `u64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF2Matrix({}x{}", self.rows, self.cols)?;
        if self.rows <= 16 && self.cols <= 64 {
            for i in 0..self.rows {
                write!(f, "; ")?;
                for j in 0..self.cols {
                    write!(f, "{}", u8::from(self.get(i, j)))?;
                }
            }
        }
        write!(f, ")")
    }
}

impl GF2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        GF2Matrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    /// Matrix with no rows yet; grow it with [`GF2Matrix::push_row`].
    pub fn with_cols(cols: usize) -> Self {
        GF2Matrix::zero(0, cols)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GF2Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = GF2Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        bit_get(self.row(i), j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = i * self.wpr + j / 64;
        let mask = 1u64 << (j % 64);
        if v {
            self.data[w] |= mask;
        } else {
            self.data[w] &= !mask;
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    pub fn push_row(&mut self, words: &[u64]) {
        assert_eq!(words.len(), self.wpr);
        self.data.extend_from_slice(words);
        self.rows += 1;
    }

    pub fn push_row_bits(&mut self, bits: impl IntoIterator<Item = usize>) {
        let start = self.data.len();
        self.data.resize(start + self.wpr, 0);
        for j in bits {
            debug_assert!(j < self.cols);
            self.data[start + j / 64] ^= 1 << (j % 64);
        }
        self.rows += 1;
    }

    pub fn row_set_bits(&self, i: usize) -> Vec<usize> {
        set_bits(self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.wpr {
            self.data.swap(i * self.wpr + k, j * self.wpr + k);
        }
    }

    /// `row[dst] ^= row[src]` for distinct indices.
    pub fn row_xor_from(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let wpr = self.wpr;
        let (lo, hi) = (dst.min(src), dst.max(src));
        let (a, b) = self.data.split_at_mut(hi * wpr);
        let lo_slice = &mut a[lo * wpr..lo * wpr + wpr];
        let hi_slice = &mut b[..wpr];
        if dst < src {
            xor_into(lo_slice, hi_slice);
        } else {
            xor_into(hi_slice, lo_slice);
        }
    }

    /// `row[i] ^= src` for an external word slice.
    pub fn row_xor_slice(&mut self, i: usize, src: &[u64]) {
        xor_into(self.row_mut(i), src);
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut out = GF2Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in set_bits(self.row(i)) {
                out.set(j, i, true);
            }
        }
        out
    }

    /// Entrywise XOR of a matrix with identical shape.
    pub fn add_assign(&mut self, other: &GF2Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, rhs: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = GF2Matrix::zero(self.rows, rhs.cols);
        let owpr = out.wpr;
        let work = |(i, out_row): (usize, &mut [u64])| {
            for j in set_bits(self.row(i)) {
                xor_into(out_row, rhs.row(j));
            }
        };
        if self.rows >= 256 {
            out.data
                .par_chunks_mut(owpr)
                .enumerate()
                .for_each(|(i, r)| work((i, r)));
        } else {
            out.data
                .chunks_mut(owpr)
                .enumerate()
                .for_each(|(i, r)| work((i, r)));
        }
        out
    }

    /// `self * x` for a column vector `x` of length `cols`; result length `rows`.
    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.wpr);
        let mut out = vec![0u64; words_for(self.rows)];
        for i in 0..self.rows {
            if dot(self.row(i), x) {
                bit_set(&mut out, i);
            }
        }
        out
    }

    /// `x * self` for a row vector `x` of length `rows`; result length `cols`.
    pub fn vec_mul(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), words_for(self.rows));
        let mut out = vec![0u64; self.wpr];
        for i in set_bits(x) {
            xor_into(&mut out, self.row(i));
        }
        out
    }

    /// Reduced row echelon form in place.  Returns the pivot columns; row `r`
    /// of the result has its pivot at `pivots[r]`, rows past `pivots.len()`
    /// are zero.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.row_xor_from(i, r);
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// RREF together with the transform `t` satisfying `t * self = rref`.
    /// Rows of `t` past the rank describe left-kernel combinations.
    pub fn rref_with_transform(&self) -> (GF2Matrix, GF2Matrix, Vec<usize>) {
        let mut ech = self.clone();
        let mut t = GF2Matrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| ech.get(i, c)) else {
                continue;
            };
            ech.swap_rows(r, p);
            t.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && ech.get(i, c) {
                    ech.row_xor_from(i, r);
                    t.row_xor_from(i, r);
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        (ech, t, pivots)
    }

    /// Basis of `{x : self * x = 0}`, one vector per row of the result.
    pub fn nullspace(&self) -> GF2Matrix {
        let mut ech = self.clone();
        let pivots = ech.rref_in_place();
        let mut pivot_at = vec![usize::MAX; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_at[c] = r;
        }
        let mut out = GF2Matrix::with_cols(self.cols);
        for f in 0..self.cols {
            if pivot_at[f] != usize::MAX {
                continue;
            }
            let mut v = vec![0u64; out.wpr];
            bit_set(&mut v, f);
            for (r, &c) in pivots.iter().enumerate() {
                if ech.get(r, f) {
                    bit_set(&mut v, c);
                }
            }
            out.push_row(&v);
        }
        out
    }

    /// Left kernel: basis of `{x : x * self = 0}`.
    pub fn left_nullspace(&self) -> GF2Matrix {
        let (ech, t, pivots) = self.rref_with_transform();
        let _ = ech;
        let mut out = GF2Matrix::with_cols(self.rows);
        for i in pivots.len()..self.rows {
            out.push_row(t.row(i));
        }
        out
    }

    pub fn inverse(&self) -> Option<GF2Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let (_, t, pivots) = self.rref_with_transform();
        (pivots.len() == self.rows).then_some(t)
    }
}

/// Row space of a matrix in reduced form, supporting fast membership tests
/// and coordinate extraction relative to the *original* generating rows.
pub struct RowBasis {
    ech: GF2Matrix,
    transform: GF2Matrix,
    pivots: Vec<usize>,
    generators: usize,
}

impl RowBasis {
    pub fn new(m: &GF2Matrix) -> RowBasis {
        let (mut ech, mut t, pivots) = m.rref_with_transform();
        // Drop the zero rows; keep the transform rows aligned with ech rows.
        let r = pivots.len();
        ech.data.truncate(r * ech.wpr);
        ech.rows = r;
        t.data.truncate(r * t.wpr);
        t.rows = r;
        RowBasis {
            ech,
            transform: t,
            pivots,
            generators: m.rows(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the basis in place; `v` becomes the residue.
    pub fn reduce(&self, v: &mut [u64]) {
        for (r, &c) in self.pivots.iter().enumerate() {
            if bit_get(v, c) {
                xor_into(v, self.ech.row(r));
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Express `v` as an XOR of the original generator rows.  The result is a
    /// bit vector over generator indices, or `None` if `v` is outside the
    /// row space.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        let mut w = v.to_vec();
        let mut acc = vec![0u64; words_for(self.generators)];
        for (r, &c) in self.pivots.iter().enumerate() {
            if bit_get(&w, c) {
                xor_into(&mut w, self.ech.row(r));
                xor_into(&mut acc, self.transform.row(r));
            }
        }
        is_zero(&w).then_some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> GF2Matrix {
        GF2Matrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
    }

    #[test]
    fn rank_and_nullity_add_up() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let rows = rng.gen_range(1..12);
            let cols = rng.gen_range(1..90);
            let m = random_matrix(&mut rng, rows, cols);
            let null = m.nullspace();
            assert_eq!(m.rank() + null.rows(), cols);
            for i in 0..null.rows() {
                assert!(is_zero(&m.mul_vec(null.row(i))));
            }
            // Null space rows are independent by construction.
            assert_eq!(null.rank(), null.rows());
        }
    }

    #[test]
    fn left_nullspace_annihilates() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let rows = rng.gen_range(1..40);
            let cols = rng.gen_range(1..20);
            let m = random_matrix(&mut rng, rows, cols);
            let ln = m.left_nullspace();
            assert_eq!(ln.rows(), rows - m.rank());
            for i in 0..ln.rows() {
                assert!(is_zero(&m.vec_mul(ln.row(i))));
            }
        }
    }

    #[test]
    fn inverse_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut found = 0;
        while found < 10 {
            let n = rng.gen_range(1..24);
            let m = random_matrix(&mut rng, n, n);
            if let Some(inv) = m.inverse() {
                assert_eq!(m.mul(&inv), GF2Matrix::identity(n));
                assert_eq!(inv.mul(&m), GF2Matrix::identity(n));
                found += 1;
            }
        }
    }

    #[test]
    fn transpose_involution_and_product_rule() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let a = random_matrix(&mut rng, 9, 17);
        let b = random_matrix(&mut rng, 17, 5);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn vec_products_match_matrix_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let a = random_matrix(&mut rng, 20, 33);
        for _ in 0..10 {
            let mut x = vec![0u64; words_for(33)];
            for j in 0..33 {
                if rng.gen_bool(0.5) {
                    bit_set(&mut x, j);
                }
            }
            let y = a.mul_vec(&x);
            for i in 0..20 {
                assert_eq!(bit_get(&y, i), dot(a.row(i), &x));
            }
        }
    }

    #[test]
    fn row_basis_coords_reconstruct() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..20 {
            let rows = rng.gen_range(1..15);
            let cols = rng.gen_range(1..40);
            let m = random_matrix(&mut rng, rows, cols);
            let basis = RowBasis::new(&m);
            assert_eq!(basis.rank(), m.rank());
            // Random combination of generators must be recognised and rebuilt.
            let mut v = vec![0u64; words_for(cols)];
            let mut picked = vec![0u64; words_for(rows)];
            for i in 0..rows {
                if rng.gen_bool(0.5) {
                    bit_set(&mut picked, i);
                    xor_into(&mut v, m.row(i));
                }
            }
            assert!(basis.contains(&v));
            let coords = basis.coords(&v).unwrap();
            // Re-expand the coords and compare.
            let rebuilt = m.vec_mul(&coords);
            assert_eq!(rebuilt, v);
        }
    }

    #[test]
    fn set_bit_iteration_matches_get() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let m = random_matrix(&mut rng, 4, 130);
        for i in 0..4 {
            let listed = m.row_set_bits(i);
            let direct: Vec<usize> = (0..130).filter(|&j| m.get(i, j)).collect();
            assert_eq!(listed, direct);
        }
    }
}
