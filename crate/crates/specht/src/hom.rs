//! The tableau-homomorphism calculus over GF(2).
//!
//! A row-standard tableau `T` of shape `μ` and content type `λ` labels a
//! homomorphism `Θ_T : M^μ → M^λ` of permutation modules; its restriction
//! to the Specht module `S^μ ⊆ M^μ` is written `Θ̂_T`.  This module works
//! with formal GF(2) sums of such labels ([`GF2Combo`]) and implements:
//!
//! * [`psi_compose`] — the one-row-down maps `ψ_{d,t} : M^λ → M^ν` composed
//!   with a labelled homomorphism, expanded back into labels (an identity of
//!   maps on all of `M^μ`);
//! * [`row_relation`] and [`garnir_relation`] — linear relations among the
//!   restricted maps `Θ̂_T` (identities on `S^μ` only);
//! * [`semistandardise`] — rewriting a combination into the canonical
//!   semistandard basis, which is linearly independent, so a combination
//!   restricts to zero iff it semistandardises to nothing;
//! * [`compose`] — the closed-form product `Θ_T ∘ Θ_S` (an `M`-level
//!   identity);
//! * [`hom_space`] — `Hom(S^μ, S^λ)` by the kernel intersection method:
//!   the semistandard combinations killed by every `ψ_{d,t}`.

use crate::partition::{binom_odd, Composition, Partition};
use crate::tableau::{Entry, Tableau};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::collections::HashMap;

/// Formal GF(2) sum of row-standard tableaux sharing a shape and a content
/// type.  Addition is symmetric difference of supports.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Combo {
    shape: Partition,
    ctype: Composition,
    support: BTreeSet<Tableau>,
}

impl GF2Combo {
    pub fn zero(shape: Partition, ctype: Composition) -> GF2Combo {
        GF2Combo {
            shape,
            ctype,
            support: BTreeSet::new(),
        }
    }

    /// Single label; shape and type are read off the tableau.
    pub fn from_tableau(t: &Tableau) -> GF2Combo {
        let mut c = GF2Combo::zero(t.shape(), t.ctype());
        c.toggle(t.clone());
        c
    }

    /// Single label with an explicitly supplied type (allows trailing zero
    /// parts that cannot be read off the entries).
    pub fn from_tableau_typed(t: &Tableau, ctype: Composition) -> GF2Combo {
        let mut c = GF2Combo::zero(t.shape(), ctype);
        c.toggle(t.clone());
        c
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn ctype(&self) -> &Composition {
        &self.ctype
    }

    pub fn support(&self) -> impl Iterator<Item = &Tableau> {
        self.support.iter()
    }

    pub fn support_set(&self) -> &BTreeSet<Tableau> {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.support.contains(t)
    }

    fn check_member(&self, t: &Tableau) {
        debug_assert_eq!(t.shape(), self.shape, "combo member has wrong shape");
        debug_assert!(
            (1..=self.ctype.len())
                .all(|v| t.count(v as Entry) == self.ctype.get(v - 1))
                && t.max_entry() as usize <= self.ctype.len(),
            "combo member {t} has wrong content for {:?}",
            self.ctype
        );
    }

    /// XOR a single label in or out.
    pub fn toggle(&mut self, t: Tableau) {
        self.check_member(&t);
        if !self.support.remove(&t) {
            self.support.insert(t);
        }
    }

    /// `self += other` over GF(2).
    pub fn add(&mut self, other: &GF2Combo) {
        assert_eq!(self.shape, other.shape);
        assert_eq!(self.ctype, other.ctype);
        for t in &other.support {
            if !self.support.remove(t) {
                self.support.insert(t.clone());
            }
        }
    }

    /// Stable-sort the content type into a partition, renaming values in
    /// every support tableau accordingly (the canonical isomorphism
    /// `M^ν ≅ M^{ν⁺}` given by relabelling).
    pub fn relabel_to_partition(&self) -> GF2Combo {
        let (sorted, map) = self.ctype.sort_to_partition();
        let mut out = GF2Combo::zero(self.shape.clone(), Composition::from(&sorted));
        for t in &self.support {
            out.toggle(t.relabel(&map));
        }
        out
    }

    /// All support members are semistandard.
    pub fn is_semistandard(&self) -> bool {
        self.support.iter().all(Tableau::is_semistandard)
    }
}

impl std::fmt::Debug for GF2Combo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Combo(shape {:?}, type {:?}, {{",
            self.shape, self.ctype
        )?;
        for (i, t) in self.support.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}})")
    }
}

/// Compose `ψ_{d,t} : M^λ → M^ν` after the combination `c` of labelled maps
/// into `M^λ`, expanding the result in labels of type `ν`.
///
/// `d ≥ 1` is 1-based and `1 ≤ t ≤ λ_{d+1}`; the codomain type `ν` equals
/// `λ` with `λ_d ↦ λ_d + t` and `λ_{d+1} ↦ λ_{d+1} − t`.  On a single label
/// the expansion runs over all ways to replace `t` of the entries equal to
/// `d+1` by `d`, each with coefficient `Π_j C(S^j_d, T^j_d)` over the rows.
/// This is an identity of maps on the whole of `M^μ`.
pub fn psi_compose(d: usize, t: usize, c: &GF2Combo) -> GF2Combo {
    assert!(d >= 1, "psi row index is 1-based");
    let lam = c.ctype();
    assert!(lam.is_partition(), "psi needs a partition codomain type");
    assert!(
        1 <= t && t <= lam.get(d),
        "psi index t={t} out of range for row {d} of {lam:?}"
    );
    let mut nu = lam.parts().to_vec();
    nu[d - 1] += t;
    nu[d] -= t;
    let mut out = GF2Combo::zero(c.shape().clone(), Composition::new(nu));

    let hi = (d + 1) as Entry;
    let lo = d as Entry;
    for tab in c.support() {
        // Distribute the t replacements over rows; r_j of the (d+1)s in
        // row j become ds, with row coefficient C(T^j_d + r_j, r_j).
        fn rec(
            tab: &Tableau,
            lo: Entry,
            hi: Entry,
            row: usize,
            left: usize,
            plan: &mut Vec<usize>,
            out: &mut GF2Combo,
        ) {
            if row == tab.num_rows() {
                if left > 0 {
                    return;
                }
                let mut odd = true;
                for (j, &r) in plan.iter().enumerate() {
                    if !binom_odd(tab.count_in_row(j, lo) + r, r) {
                        odd = false;
                        break;
                    }
                }
                if odd {
                    let rows = tab
                        .rows()
                        .iter()
                        .enumerate()
                        .map(|(j, r)| {
                            let mut swapped = 0;
                            r.iter()
                                .map(|&e| {
                                    if e == hi && swapped < plan[j] {
                                        swapped += 1;
                                        lo
                                    } else {
                                        e
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    out.toggle(Tableau::new(rows));
                }
                return;
            }
            let cap = tab.count_in_row(row, hi).min(left);
            for r in 0..=cap {
                plan.push(r);
                rec(tab, lo, hi, row + 1, left - r, plan, out);
                plan.pop();
            }
        }
        rec(tab, lo, hi, 0, t, &mut Vec::new(), &mut out);
    }
    out
}

/// Express `Θ̂_tab` by pushing every entry `i` out of row `k` into row `j`
/// (1-based rows, `shape_j ≥ shape_k`) and pulling an arbitrary multiset of
/// other entries back.  Valid only on the Specht module `S^shape`.
///
/// The returned combination equals `Θ̂_tab`: its terms `S` have
/// `S^j_i = T^j_i + T^k_i`, agree with `tab` off rows `j, k`, and carry
/// coefficient `Π_{l≠i} C(S^k_l, T^k_l)`.  When `T^j_i + T^k_i` exceeds
/// row `j` there is no room to pull back, the sum is empty, and
/// `Θ̂_tab = 0`.
pub fn row_relation(tab: &Tableau, i: Entry, j: usize, k: usize) -> GF2Combo {
    let shape = tab.shape();
    assert!(j >= 1 && k >= 1 && j != k, "rows are 1-based and distinct");
    assert!(
        shape.get(j - 1) >= shape.get(k - 1),
        "receiving row must be at least as long"
    );
    let (j, k) = (j - 1, k - 1);
    let m = tab.count_in_row(k, i);
    let mut out = GF2Combo::zero(shape, tab.ctype());

    // Values available to move back from row j (everything but the is).
    let mut avail: Vec<(Entry, usize)> = Vec::new();
    for &e in tab.row(j) {
        if e == i {
            continue;
        }
        match avail.last_mut() {
            Some((v, c)) if *v == e => *c += 1,
            _ => avail.push((e, 1)),
        }
    }

    fn rec(
        tab: &Tableau,
        i: Entry,
        j: usize,
        k: usize,
        avail: &[(Entry, usize)],
        idx: usize,
        left: usize,
        moved: &mut Vec<(Entry, usize)>,
        out: &mut GF2Combo,
    ) {
        if left == 0 {
            let mut odd = true;
            for &(v, c) in moved.iter() {
                if !binom_odd(tab.count_in_row(k, v) + c, c) {
                    odd = false;
                    break;
                }
            }
            if odd {
                let total_i = tab.count_in_row(j, i) + tab.count_in_row(k, i);
                let mut rows = tab.rows().to_vec();
                let mut row_j: Vec<Entry> =
                    rows[j].iter().copied().filter(|&e| e != i).collect();
                for &(v, c) in moved.iter() {
                    for _ in 0..c {
                        let pos = row_j.iter().position(|&e| e == v).unwrap();
                        row_j.remove(pos);
                    }
                }
                row_j.extend(std::iter::repeat(i).take(total_i));
                let mut row_k: Vec<Entry> =
                    rows[k].iter().copied().filter(|&e| e != i).collect();
                for &(v, c) in moved.iter() {
                    row_k.extend(std::iter::repeat(v).take(c));
                }
                rows[j] = row_j;
                rows[k] = row_k;
                out.toggle(Tableau::new(rows));
            }
            return;
        }
        if idx == avail.len() {
            return;
        }
        let (v, have) = avail[idx];
        for c in 0..=have.min(left) {
            if c > 0 {
                moved.push((v, c));
            }
            rec(tab, i, j, k, avail, idx + 1, left - c, moved, out);
            if c > 0 {
                moved.pop();
            }
        }
    }
    rec(tab, i, j, k, &avail, 0, m, &mut Vec::new(), &mut out);
    out
}

/// The Garnir-style zero relation on `Θ̂`s for rows `i, i+1` (1-based `i`).
///
/// `a ⊔ b ⊔ c` must equal the combined multiset of rows `i` and `i+1` of
/// `tab`, with `|b| > shape_i` (the belt strictly longer than row `i`).
/// The result is the full combination
/// `Σ_{b = D⊔E, |D| = shape_i − |a|} Π_v C(a_v+D_v, D_v)·C(c_v+E_v, E_v)
/// Θ̂_{T_{D,E}}`, which is zero on `S^shape`; rows `i`/`i+1` of `T_{D,E}`
/// are `a⊔D` / `c⊔E`.
pub fn garnir_relation(
    tab: &Tableau,
    i: usize,
    a: &[Entry],
    b: &[Entry],
    c: &[Entry],
) -> GF2Combo {
    let shape = tab.shape();
    assert!(i >= 1 && i < shape.len(), "rows i, i+1 must exist");
    let i0 = i - 1;
    let li = shape.get(i0);
    assert!(b.len() > li, "belt must be longer than row {i} (length {li})");
    assert!(a.len() <= li, "row {i} cannot hold all of a");
    {
        let mut union: Vec<Entry> = tab.row(i0).to_vec();
        union.extend_from_slice(tab.row(i0 + 1));
        union.sort_unstable();
        let mut given: Vec<Entry> = a.iter().chain(b).chain(c).copied().collect();
        given.sort_unstable();
        assert_eq!(union, given, "a ⊔ b ⊔ c must refill rows {i} and {}", i + 1);
    }

    let count_of = |m: &[Entry], v: Entry| m.iter().filter(|&&e| e == v).count();
    let dsize = li - a.len();
    let mut bvals: Vec<(Entry, usize)> = Vec::new();
    for &e in b {
        match bvals.last_mut() {
            Some((v, cnt)) if *v == e => *cnt += 1,
            _ => bvals.push((e, 1)),
        }
    }

    let mut out = GF2Combo::zero(shape, tab.ctype());
    // Split the belt: D gets dsize entries, E the rest.
    fn rec(
        tab: &Tableau,
        i0: usize,
        a: &[Entry],
        c: &[Entry],
        bvals: &[(Entry, usize)],
        idx: usize,
        left: usize,
        taken: &mut Vec<usize>,
        out: &mut GF2Combo,
        count_of: &dyn Fn(&[Entry], Entry) -> usize,
    ) {
        if idx == bvals.len() {
            if left > 0 {
                return;
            }
            let mut odd = true;
            let mut lower: Vec<Entry> = c.to_vec();
            let mut upper: Vec<Entry> = a.to_vec();
            for (t, &(v, have)) in taken.iter().copied().zip(bvals) {
                let e = have - t;
                if !binom_odd(count_of(a, v) + t, t) || !binom_odd(count_of(c, v) + e, e) {
                    odd = false;
                    break;
                }
                upper.extend(std::iter::repeat(v).take(t));
                lower.extend(std::iter::repeat(v).take(e));
            }
            if odd {
                let mut rows = tab.rows().to_vec();
                rows[i0] = upper;
                rows[i0 + 1] = lower;
                out.toggle(Tableau::new(rows));
            }
            return;
        }
        let (_, have) = bvals[idx];
        for t in 0..=have.min(left) {
            taken.push(t);
            rec(tab, i0, a, c, bvals, idx + 1, left - t, taken, out, count_of);
            taken.pop();
        }
    }
    rec(
        tab, i0, a, c, &bvals, 0, dsize, &mut Vec::new(), &mut out, &count_of,
    );
    out
}

/// Rewrites restricted tableau maps into the semistandard basis, caching
/// per-tableau expansions so repeated constraints stay cheap.
pub struct Semistandardiser {
    cache: HashMap<Tableau, BTreeSet<Tableau>>,
}

impl Default for Semistandardiser {
    fn default() -> Self {
        Self::new()
    }
}

impl Semistandardiser {
    pub fn new() -> Semistandardiser {
        Semistandardiser {
            cache: HashMap::new(),
        }
    }

    /// Rewrite the combination into semistandard support.  Equality holds
    /// as maps on `S^shape`; since the semistandard maps are linearly
    /// independent, the result is empty iff the input restricts to zero.
    pub fn reduce(&mut self, c: &GF2Combo) -> GF2Combo {
        assert!(
            c.ctype().is_partition(),
            "semistandardisation needs a partition content type"
        );
        let mut out = GF2Combo::zero(c.shape().clone(), c.ctype().clone());
        for t in c.support() {
            for s in self.reduce_tableau(t) {
                out.toggle(s);
            }
        }
        out
    }

    fn reduce_tableau(&mut self, t: &Tableau) -> BTreeSet<Tableau> {
        if t.is_semistandard() {
            return BTreeSet::from([t.clone()]);
        }
        if let Some(hit) = self.cache.get(t) {
            return hit.clone();
        }
        let (i, col) = find_violation(t).expect("non-semistandard tableau has a violation");
        // Belt construction: everything from the violation column to the end
        // of row i, together with row i+1 up to the *last* copy of the
        // offending value (so the pivot's coefficient is odd).
        let upper = t.row(i);
        let lower = t.row(i + 1);
        let y = lower[col];
        let c2 = lower.iter().rposition(|&e| e == y).unwrap();
        let a: Vec<Entry> = upper[..col].to_vec();
        let cc: Vec<Entry> = lower[c2 + 1..].to_vec();
        let mut b: Vec<Entry> = upper[col..].to_vec();
        b.extend_from_slice(&lower[..=c2]);
        b.sort_unstable();

        let rel = garnir_relation(t, i + 1, &a, &b, &cc);
        assert!(
            rel.contains(t),
            "pivot {t} must appear in its own Garnir relation"
        );
        let mut acc: BTreeSet<Tableau> = BTreeSet::new();
        for s in rel.support() {
            if s == t {
                continue;
            }
            debug_assert!(
                s.strictly_dominates(t),
                "Garnir replacement {s} must strictly dominate the pivot {t}"
            );
            for r in self.reduce_tableau(s) {
                if !acc.remove(&r) {
                    acc.insert(r);
                }
            }
        }
        self.cache.insert(t.clone(), acc.clone());
        acc
    }
}

/// First column violation, scanning columns left to right and, within a
/// column, upper rows first.  Returns (upper row index 0-based, column).
fn find_violation(t: &Tableau) -> Option<(usize, usize)> {
    let rows = t.rows();
    let mut best: Option<(usize, usize)> = None; // (col, row)
    for i in 0..rows.len().saturating_sub(1) {
        for c in 0..rows[i + 1].len() {
            if rows[i + 1][c] <= rows[i][c] {
                best = match best {
                    Some((bc, bi)) if (bc, bi) <= (c, i) => Some((bc, bi)),
                    _ => Some((c, i)),
                };
                break;
            }
        }
    }
    best.map(|(c, i)| (i, c))
}

/// One-shot semistandardisation (see [`Semistandardiser::reduce`]).
pub fn semistandardise(c: &GF2Combo) -> GF2Combo {
    Semistandardiser::new().reduce(c)
}

/// The composite `Θ_outer ∘ Θ_inner : M^{inner.shape} → M^{outer.ctype}`,
/// expanded in labels.  An identity of maps on the whole permutation
/// module, extended bilinearly over both combinations.
///
/// For single labels `S` (inner, shape λ type μ) and `T` (outer, shape μ
/// type ν): sum over all collections `X^{ij}` splitting each row `T^i` into
/// multisets of sizes `S^j_i`; the term tableau has rows `U^j = ⊔_i X^{ij}`
/// and coefficient `Π_{j,v}` multinomial of `(X^{ij}_v)_i`.
pub fn compose(outer: &GF2Combo, inner: &GF2Combo) -> GF2Combo {
    let chain_len = inner.ctype().len().max(outer.shape().len());
    assert!(
        (0..chain_len).all(|r| inner.ctype().get(r) == outer.shape().get(r)),
        "inner type {:?} must equal outer shape {:?}",
        inner.ctype(),
        outer.shape()
    );
    let mut out = GF2Combo::zero(inner.shape().clone(), outer.ctype().clone());
    for s in inner.support() {
        for t in outer.support() {
            compose_single(s, t, &mut out);
        }
    }
    out
}

fn compose_single(s: &Tableau, t: &Tableau, out: &mut GF2Combo) {
    let target_rows = s.num_rows();
    let max_val = t.max_entry() as usize;
    // acc[j][v-1] = how many vs row j has collected so far.
    let mut acc = vec![vec![0usize; max_val]; target_rows];

    // Process t's rows in order; row i of t must split into pieces of sizes
    // S^j_{i+1} across the rows j of the result.  Coefficients accumulate as
    // iterated binomials C(acc + new, new), giving the multinomial overall,
    // and even branches are pruned immediately.
    fn row_splits(
        s: &Tableau,
        t: &Tableau,
        i: usize,
        vals: &[(Entry, usize)],
        vidx: usize,
        need: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut GF2Combo,
    ) {
        if vidx == vals.len() {
            if need.iter().all(|&r| r == 0) {
                next_row(s, t, i + 1, acc, out);
            }
            return;
        }
        let (v, have) = vals[vidx];
        // Distribute `have` copies of v over the result rows.
        fn distribute(
            s: &Tableau,
            t: &Tableau,
            i: usize,
            vals: &[(Entry, usize)],
            vidx: usize,
            v: Entry,
            row: usize,
            have: usize,
            need: &mut Vec<usize>,
            acc: &mut Vec<Vec<usize>>,
            out: &mut GF2Combo,
        ) {
            if have == 0 {
                row_splits(s, t, i, vals, vidx + 1, need, acc, out);
                return;
            }
            if row == need.len() {
                return;
            }
            for c in 0..=have.min(need[row]) {
                if c > 0 {
                    if !binom_odd(acc[row][v as usize - 1] + c, c) {
                        // Even multinomial factor: this branch and all its
                        // larger-c siblings differ only in this factor's
                        // carry pattern, but each c is its own branch.
                        continue;
                    }
                    need[row] -= c;
                    acc[row][v as usize - 1] += c;
                }
                distribute(
                    s, t, i, vals, vidx, v, row + 1, have - c, need, acc, out,
                );
                if c > 0 {
                    need[row] += c;
                    acc[row][v as usize - 1] -= c;
                }
            }
        }
        distribute(s, t, i, vals, vidx, v, 0, have, need, acc, out);
    }

    fn next_row(
        s: &Tableau,
        t: &Tableau,
        i: usize,
        acc: &mut Vec<Vec<usize>>,
        out: &mut GF2Combo,
    ) {
        if i == t.num_rows() {
            let rows: Vec<Vec<Entry>> = acc
                .iter()
                .map(|counts| {
                    counts
                        .iter()
                        .enumerate()
                        .flat_map(|(v, &c)| {
                            std::iter::repeat((v + 1) as Entry).take(c)
                        })
                        .collect()
                })
                .collect();
            out.toggle(Tableau::new(rows));
            return;
        }
        // Row i of t (value i+1 of s) splits into sizes S^j_{i+1}.
        let mut vals: Vec<(Entry, usize)> = Vec::new();
        for &e in t.row(i) {
            match vals.last_mut() {
                Some((v, c)) if *v == e => *c += 1,
                _ => vals.push((e, 1)),
            }
        }
        let mut need: Vec<usize> = (0..s.num_rows())
            .map(|j| s.count_in_row(j, (i + 1) as Entry))
            .collect();
        row_splits(s, t, i, &vals, 0, &mut need, acc, out);
    }

    next_row(s, t, 0, &mut acc, out);
}

/// The semistandard labels of `Hom(S^shape, M^ctype)`: always linearly
/// independent, spanning exactly when the shape is 2-regular.
pub struct HomBasis {
    pub shape: Partition,
    pub ctype: Composition,
    pub tableaux: Vec<Tableau>,
    pub complete: bool,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }
}

pub fn hom_to_perm_basis(mu: &Partition, lambda: &Composition) -> HomBasis {
    HomBasis {
        shape: mu.clone(),
        ctype: lambda.clone(),
        tableaux: Tableau::semistandard(mu, lambda),
        complete: mu.two_regular(),
    }
}

/// A computed subspace of `Hom(S^μ, S^λ)` inside the semistandard span.
pub struct HomSpace {
    pub mu: Partition,
    pub lambda: Partition,
    /// Semistandard basis labels of `Hom(S^μ, M^λ)` the solutions refer to.
    pub tableaux: Vec<Tableau>,
    /// Solution combinations: maps `S^μ → M^λ` with image inside `S^λ`.
    pub basis: Vec<GF2Combo>,
    /// True when `μ` is 2-regular, in which case this is all of
    /// `Hom(S^μ, S^λ)`; otherwise a subspace.
    pub complete: bool,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Compute `Hom(S^μ, S^λ)` (or a subspace if `μ` is 2-singular) by the
/// kernel intersection method: a semistandard combination lands in `S^λ`
/// iff every composite `ψ_{d,t} ∘ θ` vanishes, and each composite is
/// checked by semistandardising it in the codomain `M^ν`.
pub fn hom_space(mu: &Partition, lambda: &Partition) -> HomSpace {
    assert_eq!(mu.n(), lambda.n(), "partitions must have equal size");
    let lam_type = Composition::from(lambda);
    let tabs = Tableau::semistandard(mu, &lam_type);
    let m = tabs.len();

    let pairs: Vec<(usize, usize)> = (1..lambda.len())
        .flat_map(|d| (1..=lambda.get(d)).map(move |t| (d, t)))
        .collect();

    let blocks: Vec<crate::gf2::GF2Matrix> = pairs
        .par_iter()
        .map(|&(d, t)| {
            let mut semi = Semistandardiser::new();
            let images: Vec<GF2Combo> = tabs
                .iter()
                .map(|tab| {
                    let lifted = GF2Combo::from_tableau_typed(tab, lam_type.clone());
                    let image = psi_compose(d, t, &lifted).relabel_to_partition();
                    semi.reduce(&image)
                })
                .collect();
            // All images share the sorted codomain type; index its basis.
            let mut nu = lambda.parts().to_vec();
            nu[d - 1] += t;
            nu[d] -= t;
            let (nu_plus, _) = Composition::new(nu).sort_to_partition();
            let target = Tableau::semistandard(mu, &Composition::from(&nu_plus));
            let mut block = crate::gf2::GF2Matrix::zero(target.len(), m);
            for (col, image) in images.iter().enumerate() {
                for s in image.support() {
                    let row = target
                        .binary_search(s)
                        .expect("semistandardised support must lie in the basis");
                    block.set(row, col, true);
                }
            }
            block
        })
        .collect();

    let mut constraints = crate::gf2::GF2Matrix::with_cols(m);
    for b in &blocks {
        for r in 0..b.rows() {
            constraints.push_row(b.row(r));
        }
    }
    let null = constraints.nullspace();
    let basis = (0..null.rows())
        .map(|r| {
            let mut combo = GF2Combo::zero(mu.clone(), lam_type.clone());
            for idx in null.row_set_bits(r) {
                combo.toggle(tabs[idx].clone());
            }
            combo
        })
        .collect();
    HomSpace {
        mu: mu.clone(),
        lambda: lambda.clone(),
        tableaux: tabs,
        basis,
        complete: mu.two_regular(),
    }
}

/// Kernel-intersection membership: the restriction of `c` to `S^shape`
/// maps into the Specht submodule `S^ν ⊆ M^ν` (where `ν` is `c`'s content
/// type, a partition) iff `ψ_{d,t} ∘ c` restricts to zero for every
/// admissible `(d, t)`.  Each composite is checked by semistandardising,
/// which is exact because semistandard maps are linearly independent.
pub fn lands_in_specht(c: &GF2Combo) -> bool {
    assert!(
        c.ctype().is_partition(),
        "membership test needs a partition content type"
    );
    let nu: Vec<usize> = c.ctype().parts().to_vec();
    let mut semi = Semistandardiser::new();
    for d in 1..nu.len() {
        for t in 1..=nu[d] {
            let image = psi_compose(d, t, c).relabel_to_partition();
            if !semi.reduce(&image).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A homomorphism-space dimension, marked by whether the computation was
/// provably complete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomDim {
    Exact(usize),
    LowerBound(usize),
}

impl HomDim {
    pub fn value(&self) -> usize {
        match *self {
            HomDim::Exact(d) | HomDim::LowerBound(d) => d,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, HomDim::Exact(_))
    }
}

/// `dim Hom(S^λ, S^μ)`, using conjugate duality: in characteristic 2,
/// `S^{ξ'} ≅ (S^ξ)*`, so `Hom(S^λ, S^μ) ≅ Hom(S^{μ'}, S^{λ'})` and either
/// orientation may be computed.  Exact when some orientation has a
/// 2-regular source; otherwise the better lower bound.
pub fn hom_dim_dual(lambda: &Partition, mu: &Partition) -> HomDim {
    assert_eq!(lambda.n(), mu.n());
    let mu_c = mu.conjugate();
    let lam_c = lambda.conjugate();
    if mu_c.two_regular() {
        HomDim::Exact(hom_space(&mu_c, &lam_c).dim())
    } else if lambda.two_regular() {
        HomDim::Exact(hom_space(lambda, mu).dim())
    } else {
        let a = hom_space(&mu_c, &lam_c).dim();
        let b = hom_space(lambda, mu).dim();
        HomDim::LowerBound(a.max(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn combo(tabs: &[&str]) -> GF2Combo {
        let first: Tableau = tabs[0].parse().unwrap();
        let mut c = GF2Combo::zero(first.shape(), first.ctype());
        for s in tabs {
            c.toggle(s.parse().unwrap());
        }
        c
    }

    #[test]
    fn combo_xor_semantics() {
        let mut c = combo(&["112|23"]);
        c.add(&combo(&["112|23"]));
        assert!(c.is_zero());
        let mut c = combo(&["112|23", "113|22"]);
        c.add(&combo(&["113|22", "122|13"]));
        assert_eq!(c, combo(&["112|23", "122|13"]));
    }

    #[test]
    fn relabel_to_partition_stable() {
        // Type (1,3,1) sorts to (3,1,1) with 2 -> 1, then ties 1 -> 2, 3 -> 3.
        let c = combo(&["22|23|1"]).relabel_to_partition();
        assert_eq!(c.ctype(), &Composition::of(&[3, 1, 1]));
        assert_eq!(c, GF2Combo::from_tableau(&tab("11|13|2")));
    }

    #[test]
    fn psi_frozen_small_cases() {
        // Shape (2,1), type (2,1): the canonical tableau survives, the
        // other label dies to an even coefficient C(2,1).
        let r = psi_compose(1, 1, &combo(&["11|2"]));
        assert_eq!(r.support_set(), combo(&["11|1"]).support_set());
        assert_eq!(r.ctype(), &Composition::of(&[3, 0]));
        let r = psi_compose(1, 1, &combo(&["12|1"]));
        assert!(r.is_zero());

        // Shape (3,1), type (2,2), both replacements.
        let r = psi_compose(1, 2, &combo(&["112|2"]));
        assert_eq!(r.support_set(), combo(&["111|1"]).support_set());
        // Single replacement: two surviving labels.
        let r = psi_compose(1, 1, &combo(&["112|2"]));
        assert_eq!(r.support_set(), combo(&["111|2", "112|1"]).support_set());
    }

    #[test]
    fn psi_is_linear() {
        let mut both = combo(&["11|2", "12|1"]);
        let r = psi_compose(1, 1, &both);
        let mut expect = psi_compose(1, 1, &combo(&["11|2"]));
        expect.add(&psi_compose(1, 1, &combo(&["12|1"])));
        assert_eq!(r, expect);
        both.add(&combo(&["12|1"]));
        assert_eq!(psi_compose(1, 1, &both), psi_compose(1, 1, &combo(&["11|2"])));
    }

    #[test]
    fn row_relation_frozen_cases() {
        // Move the 1 in row 2 up: Θ̂_{12|1} = Θ̂_{11|2}.
        let r = row_relation(&tab("12|1"), 1, 1, 2);
        assert_eq!(r, GF2Combo::from_tableau(&tab("11|2")));
        // Too many 1s for the receiving row: the map is zero.
        let r = row_relation(&tab("11|1"), 1, 1, 2);
        assert!(r.is_zero());
        // Nothing to move: the relation is the identity.
        let r = row_relation(&tab("12|2"), 1, 1, 2);
        assert_eq!(r, GF2Combo::from_tableau(&tab("12|2")));
    }

    #[test]
    fn garnir_minimal_belt_has_belt_many_terms() {
        // Shape (2,2), A = ∅, B = {1,2,3}, C = {4}: |B| = λ_1 + 1 = 3 terms.
        let rel = garnir_relation(&tab("12|34"), 1, &[], &[1, 2, 3], &[4]);
        assert_eq!(
            rel.support_set(),
            combo(&["12|34", "13|24", "23|14"]).support_set()
        );

        // Duplicated values in the belt collapse the count.
        let rel = garnir_relation(&tab("11|22"), 1, &[], &[1, 1, 2], &[2]);
        // Splits: D={1,1} (coeff C(1+1,1)=0 on E side? compute), D={1,2}.
        // We only pin the zero-sum structure here; the exact support is
        // checked against the matrix oracle in integration tests.
        for t in rel.support() {
            assert_eq!(t.shape(), pt(&[2, 2]));
        }
    }

    #[test]
    fn semistandardise_identity_and_frozen_rewrites() {
        let c = combo(&["112|23"]);
        assert_eq!(semistandardise(&c), c);

        // Shape (2,2), type (2,2).
        assert_eq!(semistandardise(&combo(&["22|11"])), combo(&["11|22"]));
        assert!(semistandardise(&combo(&["12|12"])).is_zero());
    }

    #[test]
    fn semistandardise_output_dominates_input() {
        for shape in Partition::all(6) {
            for ct in Partition::all(6) {
                let ct = Composition::from(&ct);
                for t in Tableau::row_standard(&shape, &ct) {
                    let out = semistandardise(&GF2Combo::from_tableau_typed(&t, ct.clone()));
                    for s in out.support() {
                        assert!(s.is_semistandard());
                        assert!(s.dominates(&t), "{s} should dominate {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn compose_identity_tableau_acts_trivially() {
        // The canonical type-equals-shape tableau is the identity label.
        for shape in Partition::all(5) {
            let id = GF2Combo::from_tableau(&Tableau::type_canonical(&shape));
            for ct in Partition::all(5) {
                let ct = Composition::from(&ct);
                for t in Tableau::row_standard(&shape, &ct) {
                    let c = GF2Combo::from_tableau_typed(&t, ct.clone());
                    assert_eq!(compose(&c, &id), c, "Θ_{t} ∘ id");
                }
            }
        }
    }

    #[test]
    fn compose_matches_psi_on_merge_tableau() {
        // ψ_{d,t} is the labelled map of the two-row-merge tableau.
        for lam in Partition::all(5) {
            for d in 1..lam.len() {
                for t in 1..=lam.get(d) {
                    let mut rows: Vec<Vec<Entry>> = lam
                        .parts()
                        .iter()
                        .enumerate()
                        .map(|(j, &len)| vec![(j + 1) as Entry; len])
                        .collect();
                    rows[d] = std::iter::repeat(d as Entry)
                        .take(t)
                        .chain(std::iter::repeat((d + 1) as Entry).take(lam.get(d) - t))
                        .collect();
                    let mut nu = lam.parts().to_vec();
                    nu[d - 1] += t;
                    nu[d] -= t;
                    let merge =
                        GF2Combo::from_tableau_typed(&Tableau::new(rows), Composition::new(nu));

                    for mu in Partition::all(5) {
                        for tabl in Tableau::row_standard(&mu, &Composition::from(&lam)) {
                            let c = GF2Combo::from_tableau_typed(&tabl, Composition::from(&lam));
                            assert_eq!(
                                compose(&merge, &c),
                                psi_compose(d, t, &c),
                                "shape {mu}, type {lam}, d={d}, t={t}, T={tabl}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn compose_is_associative() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let n = 5;
        let parts = Partition::all(n);
        let mut checked = 0;
        while checked < 40 {
            let xi = parts.choose(&mut rng).unwrap();
            let nu = parts.choose(&mut rng).unwrap();
            let mu = parts.choose(&mut rng).unwrap();
            let lam = parts.choose(&mut rng).unwrap();
            let fs = Tableau::row_standard(lam, &Composition::from(mu));
            let gs = Tableau::row_standard(mu, &Composition::from(nu));
            let hs = Tableau::row_standard(nu, &Composition::from(xi));
            let (Some(f), Some(g), Some(h)) = (
                fs.choose(&mut rng),
                gs.choose(&mut rng),
                hs.choose(&mut rng),
            ) else {
                continue;
            };
            let f = GF2Combo::from_tableau_typed(f, Composition::from(mu));
            let g = GF2Combo::from_tableau_typed(g, Composition::from(nu));
            let h = GF2Combo::from_tableau_typed(h, Composition::from(xi));
            assert_eq!(
                compose(&h, &compose(&g, &f)),
                compose(&compose(&h, &g), &f),
                "h∘(g∘f) = (h∘g)∘f for f:{lam}→{mu}, g:→{nu}, h:→{xi}"
            );
            checked += 1;
        }
    }

    #[test]
    fn hom_basis_examples() {
        let b = hom_to_perm_basis(&pt(&[3, 2]), &Composition::of(&[2, 2, 1]));
        assert_eq!(b.dim(), 2);
        assert!(b.complete);
        let b = hom_to_perm_basis(&pt(&[2, 1, 1]), &Composition::of(&[2, 1, 1]));
        assert!(!b.complete);
        for n in 1..=6 {
            for lam in Partition::all(n) {
                let b = hom_to_perm_basis(&pt(&[n]), &Composition::from(&lam));
                assert_eq!(b.dim(), 1, "one-row domain, type {lam}");
            }
        }
    }

    #[test]
    fn hom_space_frozen_dimensions() {
        // Flagship: Hom(S^(6,3), S^(4,3,1,1)) is one-dimensional.
        let h = hom_space(&pt(&[6, 3]), &pt(&[4, 3, 1, 1]));
        assert_eq!(h.dim(), 1);
        assert!(h.complete);
        // Its basis map really is a combination of semistandard labels.
        assert!(h.basis[0].is_semistandard());

        // Degenerate one-row codomain.
        assert_eq!(hom_space(&pt(&[5]), &pt(&[5])).dim(), 1);
        assert_eq!(hom_space(&pt(&[4, 1]), &pt(&[5])).dim(), 0);

        // Identity always exists.
        for lam in [pt(&[3, 1]), pt(&[4, 2]), pt(&[3, 2, 1])] {
            assert!(hom_space(&lam, &lam).dim() >= 1, "{lam}");
        }
    }

    #[test]
    fn hom_dim_dual_frozen() {
        // Hom(S^(4,3,1,1), S^(2,2,2,1,1,1)) via the conjugate orientation.
        let d = hom_dim_dual(&pt(&[4, 3, 1, 1]), &pt(&[2, 2, 2, 1, 1, 1]));
        assert_eq!(d, HomDim::Exact(1));
        // v = a+1 vanishing: Hom(S^(6,5), S^(6,2,2,1)) at (a,b) = (4,4).
        let h = hom_space(&pt(&[6, 5]), &pt(&[6, 2, 2, 1]));
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn hom_space_duality_symmetry() {
        // dim Hom(S^μ, S^λ) = dim Hom(S^{λ'}, S^{μ'}) whenever both source
        // shapes are 2-regular.
        for n in 3..=7 {
            let parts = Partition::all(n);
            for mu in &parts {
                if !mu.two_regular() {
                    continue;
                }
                for lam in &parts {
                    if !lam.conjugate().two_regular() {
                        continue;
                    }
                    let a = hom_space(mu, lam).dim();
                    let b = hom_space(&lam.conjugate(), &mu.conjugate()).dim();
                    assert_eq!(a, b, "mu {mu}, lambda {lam}");
                }
            }
        }
    }
}
