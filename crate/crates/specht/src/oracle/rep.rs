//! Abstract matrix representations on Specht modules.
//!
//! A [`SpechtRep`] stores the matrices of the adjacent transpositions
//! `s_1, …, s_{n-1}` over the standard-polytabloid basis, with rows acting
//! on the right (`v ↦ v·G`).  Two constructions are provided:
//!
//! * [`SpechtRep::from_ambient`] restricts the permutation action on the
//!   tabloid module to the polytabloid row space — direct but limited to
//!   small ambient dimensions;
//! * [`SpechtRep::from_straightening`] rewrites each permuted polytabloid
//!   as a sum of standard ones using the classical two-column shuffle
//!   relations, and scales to every shape needed here.
//!
//! Both produce the same basis in the same order, so equality of the
//! resulting matrices is an exact cross-check (see the tests).

use std::collections::HashMap;

use super::specht::SpechtSubspace;
use crate::gf2::{bit_flip, set_bits, words_for};
use crate::partition::Partition;
use crate::tableau::{Entry, Tableau};
use crate::{Error, GF2Matrix, Result};

/// Largest module dimension the dense bookkeeping is allowed to take on.
pub const REP_MAX_DIM: u128 = 12_000;

/// Generator matrices stored as sparse rows: `gens[k-1][i]` lists the
/// column supports of row `i` of the matrix of `s_k`.
pub struct SpechtRep {
    lambda: Partition,
    dim: usize,
    standard: Vec<Tableau>,
    gens: Vec<Vec<Vec<u32>>>,
}

impl SpechtRep {
    /// Restrict the permutation action on `M^λ` to the polytabloid rows.
    pub fn from_ambient(lambda: &Partition) -> Result<SpechtRep> {
        let sub = SpechtSubspace::new(lambda)?;
        let gens = sub
            .restricted_gens()
            .into_iter()
            .map(|g| (0..g.rows()).map(|i| row_support(g.row(i))).collect())
            .collect();
        Ok(SpechtRep {
            lambda: lambda.clone(),
            dim: sub.dim(),
            standard: sub.standard_tableaux().to_vec(),
            gens,
        })
    }

    /// Build the matrices by straightening permuted standard fillings.
    pub fn from_straightening(lambda: &Partition) -> Result<SpechtRep> {
        if lambda.hook_dim() > REP_MAX_DIM {
            return Err(Error::Guard(format!(
                "S^{lambda} has dimension {} > {REP_MAX_DIM}",
                lambda.hook_dim()
            )));
        }
        let standard = Tableau::standard(lambda);
        let dim = standard.len();
        let index: HashMap<Tableau, u32> = standard
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
        let mut straightener = Straightener {
            index: &index,
            memo: HashMap::new(),
        };
        let n = lambda.n();
        let mut gens = Vec::with_capacity(n - 1);
        for k in 1..n {
            let mut mat = Vec::with_capacity(dim);
            for t in &standard {
                let mut grid: Grid = t.rows().to_vec();
                swap_values(&mut grid, k as Entry, (k + 1) as Entry);
                mat.push(straightener.reduce(grid));
            }
            gens.push(mat);
        }
        Ok(SpechtRep {
            lambda: lambda.clone(),
            dim,
            standard,
            gens,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// Standard tableaux labelling the basis (of the original module, for
    /// duals: of the predual).
    pub fn standard_tableaux(&self) -> &[Tableau] {
        &self.standard
    }

    pub fn words(&self) -> usize {
        words_for(self.dim)
    }

    /// Multiply a row vector by the matrix of `s_{k0+1}`.
    pub fn apply_gen(&self, k0: usize, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.words()];
        for i in set_bits(v) {
            for &j in &self.gens[k0][i] {
                bit_flip(&mut out, j as usize);
            }
        }
        out
    }

    pub fn dense_gen(&self, k0: usize) -> GF2Matrix {
        let mut g = GF2Matrix::zero(self.dim, self.dim);
        for (i, row) in self.gens[k0].iter().enumerate() {
            for &j in row {
                g.set(i, j as usize, true);
            }
        }
        g
    }

    pub fn dense_gens(&self) -> Vec<GF2Matrix> {
        (0..self.gens.len()).map(|k| self.dense_gen(k)).collect()
    }

    /// The contragredient: functionals as rows, acted on by the transposed
    /// matrices.  Over GF(2) this is a module isomorphic to the Specht
    /// module of the conjugate shape; its basis is the dual basis, for
    /// which no distinguished generator is known in advance.
    pub fn dual(&self) -> SpechtRep {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut t = vec![Vec::new(); self.dim];
                for (i, row) in g.iter().enumerate() {
                    for &j in row {
                        t[j as usize].push(i as u32);
                    }
                }
                t
            })
            .collect();
        SpechtRep {
            lambda: self.lambda.clone(),
            dim: self.dim,
            standard: self.standard.clone(),
            gens,
        }
    }
}

fn row_support(words: &[u64]) -> Vec<u32> {
    set_bits(words).map(|i| i as u32).collect()
}

/// A positional filling of the diagram; unlike [`Tableau`], rows are not
/// kept sorted, because the two-column relations act on cell positions.
type Grid = Vec<Vec<Entry>>;

fn swap_values(grid: &mut Grid, a: Entry, b: Entry) {
    for row in grid.iter_mut() {
        for x in row.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }
}

/// Sort every column ascending.  Column permutations fix a polytabloid over
/// GF(2), so this is the canonical representative of the memo key.
fn col_sort(grid: &mut Grid) {
    let width = grid[0].len();
    for c in 0..width {
        let mut col: Vec<Entry> = grid
            .iter()
            .filter(|row| row.len() > c)
            .map(|row| row[c])
            .collect();
        col.sort_unstable();
        let mut it = col.into_iter();
        for row in grid.iter_mut().filter(|row| row.len() > c) {
            row[c] = it.next().unwrap();
        }
    }
}

/// First position `(r, c)` with `grid[r][c] > grid[r][c+1]`, row-major.
fn first_descent(grid: &Grid) -> Option<(usize, usize)> {
    for (r, row) in grid.iter().enumerate() {
        for c in 0..row.len().saturating_sub(1) {
            if row[c] > row[c + 1] {
                return Some((r, c));
            }
        }
    }
    None
}

struct Straightener<'a> {
    index: &'a HashMap<Tableau, u32>,
    memo: HashMap<Grid, Vec<u32>>,
}

impl Straightener<'_> {
    /// Express the polytabloid of an arbitrary bijective filling over the
    /// standard basis.
    fn reduce(&mut self, mut grid: Grid) -> Vec<u32> {
        col_sort(&mut grid);
        if let Some(hit) = self.memo.get(&grid) {
            return hit.clone();
        }
        let result = match first_descent(&grid) {
            None => {
                // Columns strictly increase after sorting and rows have no
                // descent, so the filling is a standard tableau.
                let t = Tableau::new(grid.clone());
                vec![*self
                    .index
                    .get(&t)
                    .expect("descent-free filling must be standard")]
            }
            Some((r, c)) => {
                // Shuffle relation on the bottom of column c and the top of
                // column c+1: the combined entries exceed the column length,
                // so the signed sum over all order-preserving redistributions
                // vanishes and the identity term equals the rest (char 2).
                let col_h = grid.iter().filter(|row| row.len() > c).count();
                let a: Vec<Entry> = (r..col_h).map(|i| grid[i][c]).collect();
                let b: Vec<Entry> = (0..=r).map(|i| grid[i][c + 1]).collect();
                let mut pool: Vec<Entry> = a.iter().chain(b.iter()).copied().collect();
                pool.sort_unstable();
                let mut acc: Vec<u32> = Vec::new();
                for pick in choose_positions(pool.len(), a.len()) {
                    let mut na = Vec::with_capacity(a.len());
                    let mut nb = Vec::with_capacity(b.len());
                    for (i, &v) in pool.iter().enumerate() {
                        if pick.contains(&i) {
                            na.push(v);
                        } else {
                            nb.push(v);
                        }
                    }
                    if na == a {
                        continue;
                    }
                    let mut g = grid.clone();
                    for (off, &v) in na.iter().enumerate() {
                        g[r + off][c] = v;
                    }
                    for (i, &v) in nb.iter().enumerate() {
                        g[i][c + 1] = v;
                    }
                    let term = self.reduce(g);
                    acc = super::tabloid::xor_merge(&acc, &term);
                }
                acc
            }
        };
        self.memo.insert(grid, result.clone());
        result
    }
}

/// All ways to choose `k` of `n` positions, each as a sorted index list.
fn choose_positions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
