//! Explicit irreducible direct summands of the Specht modules `S^(a,3,1^b)`
//! over GF(2).
//!
//! Throughout, `a ≥ 4` and `b ≥ 2` are even, so `n = a + b + 3` is odd and
//! `λ = (a,3,1^b)` is 2-singular.  The candidate summand labels are
//! `μ = (u,v)` with `u + v = n`, and `μ = (u,v,2)` with `u + v + 2 = n`,
//! where `u` is even and `v` odd.  A label is certified by an explicit pair
//! of homomorphisms
//!
//! ```text
//!     γ : S^μ → S^λ        δ = σ : S^λ → S^{μ′}
//! ```
//!
//! whose composite collapses, already at the level of labelled sums, to a
//! binomial-counted multiple of one fixed nonzero map `S^μ → S^{μ′}`.  When
//! the count is odd the composite survives; since `S^μ` is irreducible and
//! `S^{μ′} ≅ S^μ` in characteristic 2, a nonzero composite forces `γ` to be
//! a split injection, exhibiting `S^μ` as a direct summand of `S^λ`.
//!
//! The module builds the maps ([`build_sigma_uv`], [`build_sigma_uv2`],
//! [`build_ab`], [`build_c`]), decides individual labels
//! ([`check_summand`]), enumerates candidates ([`candidate_mus`]), surveys
//! the `(a,b)` grid ([`survey`]), and searches for guaranteed summands in
//! the residue classes `n ≡ 3, 5 (mod 8)` ([`existence_search`]).

use itertools::Itertools;
use rayon::prelude::*;

use crate::hom::{compose, lands_in_specht, semistandardise, GF2Combo};
use crate::partition::{binom_odd, l_value};
use crate::tableau::Entry;
use crate::{Composition, Error, Partition, Result, Tableau};

/// Witness homomorphisms are materialised only when the projection side σ
/// has at most this many support tableaux; beyond it the verdict is still
/// exact (the criteria are closed-form) but `witness` is `None`.
pub const WITNESS_MAX_SUPPORT: u128 = 50_000;

/// Which of the two candidate shapes a parameter set describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SummandFamily {
    /// `μ = (u, v)` with `u + v = n`.
    TwoRow,
    /// `μ = (u, v, 2)` with `u + v + 2 = n`.
    ThreeRow,
}

/// Validated parameters `(a, b, u, v)` tying a candidate `μ` to
/// `λ = (a,3,1^b)`.
///
/// Invariants enforced by the constructors: `a ≥ 4` and `b ≥ 2` even, `v`
/// odd, `u > v`, and the family's range bound — `v ≤ min(a+1, b+3)` for
/// [`SummandFamily::TwoRow`], `2 < v ≤ min(a−1, b+1)` for
/// [`SummandFamily::ThreeRow`].  `u` is then even automatically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SummandParams {
    pub a: usize,
    pub b: usize,
    pub u: usize,
    pub v: usize,
    pub family: SummandFamily,
}

fn check_ab_base(a: usize, b: usize) -> Result<()> {
    if a % 2 != 0 || a < 4 {
        return Err(Error::Guard(format!("a must be even and ≥ 4, got {a}")));
    }
    if b % 2 != 0 || b < 2 {
        return Err(Error::Guard(format!("b must be even and ≥ 2, got {b}")));
    }
    Ok(())
}

impl SummandParams {
    /// Parameters for `μ = (u, v)` with `u = a + b + 3 − v`.
    pub fn two_row(a: usize, b: usize, v: usize) -> Result<SummandParams> {
        check_ab_base(a, b)?;
        if v % 2 == 0 {
            return Err(Error::Guard(format!("v must be odd, got {v}")));
        }
        if v > (a + 1).min(b + 3) {
            return Err(Error::Guard(format!(
                "v ≤ min(a+1, b+3) required, got v={v} with a={a}, b={b}"
            )));
        }
        let n = a + b + 3;
        let u = n - v;
        if u <= v {
            return Err(Error::Guard(format!("u > v required, got u={u}, v={v}")));
        }
        Ok(SummandParams {
            a,
            b,
            u,
            v,
            family: SummandFamily::TwoRow,
        })
    }

    /// Parameters for `μ = (u, v, 2)` with `u = a + b + 1 − v`.
    pub fn three_row(a: usize, b: usize, v: usize) -> Result<SummandParams> {
        check_ab_base(a, b)?;
        if v % 2 == 0 {
            return Err(Error::Guard(format!("v must be odd, got {v}")));
        }
        if v < 3 || v > (a - 1).min(b + 1) {
            return Err(Error::Guard(format!(
                "2 < v ≤ min(a−1, b+1) required, got v={v} with a={a}, b={b}"
            )));
        }
        let n = a + b + 3;
        let u = n - v - 2;
        if u <= v {
            return Err(Error::Guard(format!("u > v required, got u={u}, v={v}")));
        }
        Ok(SummandParams {
            a,
            b,
            u,
            v,
            family: SummandFamily::ThreeRow,
        })
    }

    pub fn n(&self) -> usize {
        self.a + self.b + 3
    }

    /// The host label `λ = (a, 3, 1^b)`.
    pub fn lambda(&self) -> Partition {
        lambda_partition(self.a, self.b)
    }

    /// The candidate label: `(u, v)` or `(u, v, 2)`.
    pub fn mu(&self) -> Partition {
        match self.family {
            SummandFamily::TwoRow => Partition::of(&[self.u, self.v]),
            SummandFamily::ThreeRow => Partition::of(&[self.u, self.v, 2]),
        }
    }

    pub fn mu_conjugate(&self) -> Partition {
        self.mu().conjugate()
    }

    /// Number of tableaux in the projection sum σ, as an exact count
    /// (saturating far above [`WITNESS_MAX_SUPPORT`]).
    pub fn sigma_support_count(&self) -> u128 {
        let (u, v, a, b) = (self.u as i64, self.v as i64, self.a as i64, self.b as i64);
        let stars = binom_count(u - v, a - v);
        match self.family {
            SummandFamily::TwoRow => stars.saturating_mul(binom_count(b + 2, 2)),
            SummandFamily::ThreeRow => stars,
        }
    }

    /// Parity of the scalar `c` in `σ ∘ γ = c · Θ̂_ref` for this family's
    /// canonical inclusion γ (see [`build_gamma`]).
    pub fn composite_scalar_odd(&self) -> bool {
        let (u, v, a, b) = (self.u as i64, self.v as i64, self.a as i64, self.b as i64);
        let stars = binom_odd_signed(u - v, a - v);
        match self.family {
            SummandFamily::TwoRow if self.a % 4 == 0 => stars && binom_odd_signed(u - a, 2),
            SummandFamily::TwoRow => stars && binom_odd_signed(b + 2, 2),
            SummandFamily::ThreeRow => stars,
        }
    }

    /// Human-readable form of the composite scalar for this parameter set.
    fn scalar_description(&self) -> String {
        let (u, v, a, b) = (self.u as i64, self.v as i64, self.a as i64, self.b as i64);
        match self.family {
            SummandFamily::TwoRow if self.a % 4 == 0 => format!(
                "γ = A+B, composite scalar C({}, {})·C({}, 2)",
                u - v,
                a - v,
                u - a
            ),
            SummandFamily::TwoRow => format!(
                "γ = A, composite scalar C({}, {})·C({}, 2)",
                u - v,
                a - v,
                b + 2
            ),
            SummandFamily::ThreeRow => {
                format!("γ = C, composite scalar C({}, {})", u - v, a - v)
            }
        }
    }

    /// Every parameter set over `(a, b)` whose projection sum σ exists:
    /// two-row with `3 ≤ v ≤ min(a−1, b+3)` and three-row with
    /// `3 ≤ v ≤ min(a−1, b+1)`, `v` odd and `u > v` throughout.
    pub fn all_sigma_admissible(a: usize, b: usize) -> Vec<SummandParams> {
        let mut out = Vec::new();
        for v in (3..=(a - 1).min(b + 3)).step_by(2) {
            out.extend(SummandParams::two_row(a, b, v));
        }
        for v in (3..=(a - 1).min(b + 1)).step_by(2) {
            out.extend(SummandParams::three_row(a, b, v));
        }
        out
    }
}

fn lambda_partition(a: usize, b: usize) -> Partition {
    let mut parts = Vec::with_capacity(b + 2);
    parts.push(a);
    parts.push(3);
    parts.extend(std::iter::repeat(1).take(b));
    Partition::new(parts)
}

/// `C(n, k)` exactly in `u128` (saturating on overflow); 0 when `k < 0`,
/// `n < 0` or `k > n`.
fn binom_count(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Parity of `C(n, k)` with out-of-range arguments counting as even.
fn binom_odd_signed(n: i64, k: i64) -> bool {
    n >= 0 && k >= 0 && binom_odd(n as usize, k as usize)
}

fn entry(x: usize) -> Entry {
    debug_assert!(x <= Entry::MAX as usize);
    x as Entry
}

fn check_family(p: SummandParams, family: SummandFamily, what: &str) -> Result<()> {
    if p.family != family {
        return Err(Error::Guard(format!(
            "{what} needs a {family:?} parameter set, got {:?}",
            p.family
        )));
    }
    assert!(
        p.u <= Entry::MAX as usize,
        "tableau entries are u8: u must be ≤ 255"
    );
    Ok(())
}

/// The two-row projection sum `σ : S^λ → S^{μ′}`, `μ = (u,v)`.
///
/// σ sums the labels of shape λ and type `μ′ = (2^v, 1^{u−v})` whose first
/// row is `1, 2, …, v` followed by `a−v` values from `{v+1, …, u}`, whose
/// second row is `1, x, y` with `x < y` drawn from the remaining values of
/// `{2, …, u}`, and whose single-box rows carry the rest in increasing
/// order.  Every value `2, …, u` appears exactly once outside the first-row
/// segment `1, …, v`, so the count is `C(u−v, a−v) · C(b+2, 2)`.
///
/// Requires `3 ≤ v ≤ a−1`; all `ψ_{d,t} ∘ σ` vanish and σ restricts to a
/// nonzero map.
pub fn build_sigma_uv(p: SummandParams) -> Result<GF2Combo> {
    check_family(p, SummandFamily::TwoRow, "the two-row σ")?;
    if p.v < 3 || p.v + 1 > p.a {
        return Err(Error::Guard(format!(
            "out-of-range v: σ needs 3 ≤ v ≤ a−1, got v={}, a={}",
            p.v, p.a
        )));
    }
    let (a, v, u) = (p.a, p.v, p.u);
    let mut sigma = GF2Combo::zero(p.lambda(), Composition::from(&p.mu_conjugate()));
    for stars in (v + 1..=u).combinations(a - v) {
        let pool: Vec<usize> = (2..=u).filter(|x| !stars.contains(x)).collect();
        let mut row1: Vec<Entry> = (1..=v).map(entry).collect();
        row1.extend(stars.iter().map(|&x| entry(x)));
        for pair in pool.iter().copied().combinations(2) {
            let mut rows = Vec::with_capacity(p.b + 2);
            rows.push(row1.clone());
            rows.push(vec![1, entry(pair[0]), entry(pair[1])]);
            rows.extend(
                pool.iter()
                    .filter(|x| !pair.contains(x))
                    .map(|&x| vec![entry(x)]),
            );
            sigma.toggle(Tableau::new(rows));
        }
    }
    Ok(sigma)
}

/// The three-row projection sum `σ : S^λ → S^{μ′}`, `μ = (u,v,2)`.
///
/// σ sums the labels of shape λ and type `μ′ = (3, 3, 2^{v−2}, 1^{u−v})`
/// whose first row is `1, 2, …, v` followed by `a−v` values from
/// `{v+1, …, u}`, whose second row is `1, 1, 2`, and whose single-box rows
/// are `2, 3, …, v` followed by the unused values in increasing order —
/// `C(u−v, a−v)` labels in all.  All `ψ_{d,t} ∘ σ` vanish and σ restricts
/// to a nonzero map.
pub fn build_sigma_uv2(p: SummandParams) -> Result<GF2Combo> {
    check_family(p, SummandFamily::ThreeRow, "the three-row σ")?;
    let (a, v, u) = (p.a, p.v, p.u);
    let mut sigma = GF2Combo::zero(p.lambda(), Composition::from(&p.mu_conjugate()));
    for stars in (v + 1..=u).combinations(a - v) {
        let mut row1: Vec<Entry> = (1..=v).map(entry).collect();
        row1.extend(stars.iter().map(|&x| entry(x)));
        let mut rows = Vec::with_capacity(p.b + 2);
        rows.push(row1);
        rows.push(vec![1, 1, 2]);
        rows.extend((2..=v).map(|s| vec![entry(s)]));
        rows.extend(
            (v + 1..=u)
                .filter(|x| !stars.contains(x))
                .map(|x| vec![entry(x)]),
        );
        sigma.toggle(Tableau::new(rows));
    }
    Ok(sigma)
}

/// σ for either family.
pub fn build_sigma(p: SummandParams) -> Result<GF2Combo> {
    match p.family {
        SummandFamily::TwoRow => build_sigma_uv(p),
        SummandFamily::ThreeRow => build_sigma_uv2(p),
    }
}

/// The two inclusion-side labels `A, B : S^μ → S^λ` for `μ = (u,v)`:
///
/// ```text
///     A = [ 1^{a−v}  2 2 2  3 4 … b+2 ]      B = [ 1^{a−v+2}  2 3 … b+2 ]
///         [ 1^v                      ]          [ 1^{v−2} 2 2          ]
/// ```
///
/// Both are nonzero on `S^μ`.  `A` is a homomorphism into `S^λ` iff
/// `a−v ≡ 3 (mod 4)` or `v = b+3`; `B` iff `v ≡ 1 (mod 4)`; `A+B` iff
/// `a ≡ 0 (mod 4)`.
pub fn build_ab(p: SummandParams) -> Result<(GF2Combo, GF2Combo)> {
    check_family(p, SummandFamily::TwoRow, "the A/B pair")?;
    if p.v < 3 || p.v + 1 > p.a {
        return Err(Error::Guard("not enough 1s to fill the bottom row".into()));
    }
    let (a, b, v) = (p.a, p.b, p.v);
    let lam_type = Composition::from(&p.lambda());

    let mut a_row1 = vec![1 as Entry; a - v];
    a_row1.extend([2, 2, 2]);
    a_row1.extend((3..=b + 2).map(entry));
    let a_tab = Tableau::new(vec![a_row1, vec![1; v]]);

    let mut b_row1 = vec![1 as Entry; a - v + 2];
    b_row1.extend((2..=b + 2).map(entry));
    let mut b_row2 = vec![1 as Entry; v - 2];
    b_row2.extend([2, 2]);
    let b_tab = Tableau::new(vec![b_row1, b_row2]);

    Ok((
        GF2Combo::from_tableau_typed(&a_tab, lam_type.clone()),
        GF2Combo::from_tableau_typed(&b_tab, lam_type),
    ))
}

/// The inclusion-side label `C : S^μ → S^λ` for `μ = (u,v,2)`:
///
/// ```text
///     C = [ 1^{a−v}  2 3 … b+2 ]
///         [ 1^v                ]
///         [ 2 2                ]
/// ```
///
/// `ψ_{d,t} ∘ Θ̂_C = 0` for every `(d,t)` and `Θ̂_C ≠ 0`, with no extra
/// condition on the parameters.
pub fn build_c(p: SummandParams) -> Result<GF2Combo> {
    check_family(p, SummandFamily::ThreeRow, "the C label")?;
    let (a, b, v) = (p.a, p.b, p.v);
    let mut row1 = vec![1 as Entry; a - v];
    row1.extend((2..=b + 2).map(entry));
    let tab = Tableau::new(vec![row1, vec![1; v], vec![2, 2]]);
    Ok(GF2Combo::from_tableau_typed(
        &tab,
        Composition::from(&p.lambda()),
    ))
}

/// The inclusion `γ : S^μ → S^λ` used by the summand certificate: `A+B`
/// when `a ≡ 0 (mod 4)`, `A` when `a ≡ 2 (mod 4)`, and `C` in the
/// three-row family.
pub fn build_gamma(p: SummandParams) -> Result<GF2Combo> {
    match p.family {
        SummandFamily::TwoRow => {
            let (a_map, b_map) = build_ab(p)?;
            if p.a % 4 == 0 {
                let mut gamma = a_map;
                gamma.add(&b_map);
                Ok(gamma)
            } else {
                Ok(a_map)
            }
        }
        SummandFamily::ThreeRow => build_c(p),
    }
}

/// The single label the composite `σ ∘ γ` collapses onto: rows `1…u` /
/// `1…v` (two-row), plus a third row `1 2` (three-row), of shape μ and
/// type `μ′`.  Nonzero on `S^μ`.
pub fn composite_reference(p: SummandParams) -> GF2Combo {
    let row1: Vec<Entry> = (1..=p.u).map(entry).collect();
    let row2: Vec<Entry> = (1..=p.v).map(entry).collect();
    let rows = match p.family {
        SummandFamily::TwoRow => vec![row1, row2],
        SummandFamily::ThreeRow => vec![row1, row2, vec![1, 2]],
    };
    GF2Combo::from_tableau_typed(&Tableau::new(rows), Composition::from(&p.mu_conjugate()))
}

/// A constructive summand certificate: the inclusion γ, the projection
/// δ = σ, and the single reference label their composite equals.
#[derive(Clone)]
pub struct Witness {
    pub params: SummandParams,
    /// The matched form was `μ′` rather than μ itself.
    pub conjugated: bool,
    /// Inclusion `S^μ → S^λ` (shape μ, type λ).
    pub gamma: GF2Combo,
    /// Projection `S^λ → S^{μ′}` (shape λ, type μ′).
    pub delta: GF2Combo,
    /// The label `σ ∘ γ` must equal outright (shape μ, type μ′).
    pub reference: GF2Combo,
}

impl Witness {
    pub fn build(params: SummandParams, conjugated: bool) -> Result<Witness> {
        Ok(Witness {
            params,
            conjugated,
            gamma: build_gamma(params)?,
            delta: build_sigma(params)?,
            reference: composite_reference(params),
        })
    }

    /// `δ ∘ γ`, expanded in labels (an exact identity of maps on `M^μ`).
    pub fn composite(&self) -> GF2Combo {
        compose(&self.delta, &self.gamma)
    }

    /// Full check of the certificate: γ and δ restrict to maps between the
    /// Specht modules, the composite collapses to the reference label on
    /// the nose, and the reference is nonzero on `S^μ`.
    pub fn verify(&self) -> bool {
        lands_in_specht(&self.gamma)
            && lands_in_specht(&self.delta)
            && self.composite() == self.reference
            && !semistandardise(&self.reference).is_zero()
    }
}

impl std::fmt::Debug for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Witness")
            .field("params", &self.params)
            .field("conjugated", &self.conjugated)
            .field("gamma_support", &self.gamma.len())
            .field("delta_support", &self.delta.len())
            .finish()
    }
}

/// The decision for one candidate label μ.
#[derive(Debug, Clone)]
pub struct SummandVerdict {
    pub mu: Partition,
    /// `S^μ` is a direct summand of `S^λ`.
    pub is_summand: bool,
    /// The certifying pair, when `is_summand` and the σ support stays
    /// within [`WITNESS_MAX_SUPPORT`].
    pub witness: Option<Witness>,
    /// Which test decided, e.g. the binomial whose parity was taken.
    pub parity_factor: String,
}

fn two_row_form(q: &Partition) -> Option<(usize, usize)> {
    (q.len() == 2 && q.get(0) % 2 == 0 && q.get(1) % 2 == 1).then(|| (q.get(0), q.get(1)))
}

fn three_row_form(q: &Partition) -> Option<(usize, usize)> {
    (q.len() == 3 && q.get(2) == 2 && q.get(0) % 2 == 0 && q.get(1) % 2 == 1)
        .then(|| (q.get(0), q.get(1)))
}

fn split_lambda(lambda: &Partition) -> Result<(usize, usize)> {
    let parts = lambda.parts();
    let ok = parts.len() >= 4
        && parts[0] >= 4
        && parts[0] % 2 == 0
        && parts[1] == 3
        && parts[2..].iter().all(|&x| x == 1)
        && parts.len() % 2 == 0;
    if ok {
        Ok((parts[0], parts.len() - 2))
    } else {
        Err(Error::Guard(format!(
            "λ must be (a, 3, 1^b) with a ≥ 4, b ≥ 2 both even, got ({lambda})"
        )))
    }
}

struct RouteHit {
    family: SummandFamily,
    v: usize,
    conjugated: bool,
    congruence: String,
}

/// First of μ, μ′ matching a decidable form with an odd binomial.
fn route_hit(a: usize, mu: &Partition) -> Option<RouteHit> {
    let ai = a as i64;
    for (q, conjugated) in [(mu.clone(), false), (mu.conjugate(), true)] {
        if let Some((u, v)) = two_row_form(&q) {
            let (ui, vi) = (u as i64, v as i64);
            if v % 4 == 3 && binom_odd_signed(ui - vi, ai - vi) {
                return Some(RouteHit {
                    family: SummandFamily::TwoRow,
                    v,
                    conjugated,
                    congruence: format!(
                        "v = {v} ≡ 3 (mod 4) and C({}, {}) is odd",
                        ui - vi,
                        ai - vi
                    ),
                });
            }
        }
        if let Some((u, v)) = three_row_form(&q) {
            let (ui, vi) = (u as i64, v as i64);
            if binom_odd_signed(ui - vi, ai - vi) {
                return Some(RouteHit {
                    family: SummandFamily::ThreeRow,
                    v,
                    conjugated,
                    congruence: format!("C({}, {}) is odd", ui - vi, ai - vi),
                });
            }
        }
    }
    None
}

fn route_failure(a: usize, mu: &Partition) -> String {
    let ai = a as i64;
    let mut reasons = Vec::new();
    for (q, tag) in [(mu.clone(), "μ"), (mu.conjugate(), "μ′")] {
        if let Some((u, v)) = two_row_form(&q) {
            let (ui, vi) = (u as i64, v as i64);
            if v % 4 != 3 {
                reasons.push(format!("{tag} = ({q}): v ≡ {} (mod 4), not 3", v % 4));
            } else {
                reasons.push(format!("{tag} = ({q}): C({}, {}) is even", ui - vi, ai - vi));
            }
        } else if let Some((u, v)) = three_row_form(&q) {
            let (ui, vi) = (u as i64, v as i64);
            reasons.push(format!("{tag} = ({q}): C({}, {}) is even", ui - vi, ai - vi));
        }
    }
    if reasons.is_empty() {
        "neither μ nor μ′ has the form (u, v) or (u, v, 2) with u even, v odd".into()
    } else {
        reasons.join("; ")
    }
}

/// Decide whether `S^μ` is a direct summand of `S^λ`, `λ = (a, 3, 1^b)`.
///
/// Only irreducible `S^μ` are classified (reducible ones get an immediate
/// `false` verdict).  `S^μ` is a summand iff μ or μ′ equals `(u,v)` with
/// `v ≡ 3 (mod 4)` and `C(u−v, a−v)` odd, or `(u,v,2)` with `C(u−v, a−v)`
/// odd.  On a positive verdict the certificate pair (γ, δ) is attached
/// whenever σ stays within [`WITNESS_MAX_SUPPORT`] support tableaux.
pub fn check_summand(lambda: &Partition, mu: &Partition) -> Result<SummandVerdict> {
    let (a, b) = split_lambda(lambda)?;
    if mu.n() != lambda.n() {
        return Err(Error::Guard(format!(
            "μ = ({mu}) has size {}, λ = ({lambda}) needs {}",
            mu.n(),
            lambda.n()
        )));
    }
    if !mu.is_irreducible_specht() {
        return Ok(SummandVerdict {
            mu: mu.clone(),
            is_summand: false,
            witness: None,
            parity_factor: format!("not classified: S^({mu}) is reducible"),
        });
    }
    match route_hit(a, mu) {
        Some(hit) => {
            let params = match hit.family {
                SummandFamily::TwoRow => SummandParams::two_row(a, b, hit.v),
                SummandFamily::ThreeRow => SummandParams::three_row(a, b, hit.v),
            }
            .expect("an odd route binomial implies admissible parameters");
            debug_assert!(params.composite_scalar_odd());
            let witness = if params.sigma_support_count() <= WITNESS_MAX_SUPPORT {
                Some(Witness::build(params, hit.conjugated)?)
            } else {
                None
            };
            let via = if hit.conjugated { " (via μ′)" } else { "" };
            Ok(SummandVerdict {
                mu: mu.clone(),
                is_summand: true,
                witness,
                parity_factor: format!(
                    "{}{via}; {}",
                    hit.congruence,
                    params.scalar_description()
                ),
            })
        }
        None => Ok(SummandVerdict {
            mu: mu.clone(),
            is_summand: false,
            witness: None,
            parity_factor: route_failure(a, mu),
        }),
    }
}

/// All candidate labels for `λ = (a, 3, 1^b)`: partitions `(u, v)` and
/// `(u, v, 2)` of `n` with `u` even and `v` odd that dominate the
/// 2-regularisation `λ^reg = (max(a, b+2), min(a−1, b+1), 2)` and lie in
/// the same 2-block as λ.  Sorted descending.
pub fn candidate_mus(a: usize, b: usize) -> Vec<Partition> {
    assert!(
        a >= 4 && a % 2 == 0 && b >= 2 && b % 2 == 0,
        "need even a ≥ 4, b ≥ 2"
    );
    let n = a + b + 3;
    let lambda = lambda_partition(a, b);
    let reg = Partition::of(&[a.max(b + 2), (a - 1).min(b + 1), 2]);
    debug_assert_eq!(reg, lambda.regularise());
    let mut out = Vec::new();
    for v in (1..).step_by(2).take_while(|&v| 2 * v < n) {
        let q = Partition::of(&[n - v, v]);
        if q.dominates(&reg) && q.same_block(&lambda) {
            out.push(q);
        }
    }
    for v in (3..).step_by(2).take_while(|&v| 2 * v < n - 2) {
        let q = Partition::of(&[n - 2 - v, v, 2]);
        if q.dominates(&reg) && q.same_block(&lambda) {
            out.push(q);
        }
    }
    out.sort_by(|p, q| q.cmp(p));
    out
}

/// The labels of all irreducible direct summands of `S^λ`, 2-regular
/// representatives only (each conjugate `S^{μ′} ≅ S^μ` splits off too).
pub fn summands(lambda: &Partition) -> Result<Vec<Partition>> {
    let (a, b) = split_lambda(lambda)?;
    Ok(candidate_mus(a, b)
        .into_iter()
        .filter(|mu| mu.is_irreducible_specht() && route_hit(a, mu).is_some())
        .collect())
}

/// Which closed-form residue tests fire at `(a, b)`, evaluated without
/// enumerating candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorollaryCase {
    /// `a+b ≡ 0 or 2 (mod 8)` with `a ≥ 6`, `b ≥ 4`.
    pub residue: bool,
    /// `a+b ≡ 2 (mod 4)` and `C(a+b−3, a−3)` odd — the `(a+b, 3)` summand.
    pub two_row: bool,
    /// `a+b ≡ 0 (mod 4)` and `C(a+b−9, a−5)` odd — the `(a+b−4, 5, 2)`
    /// summand.
    pub three_row: bool,
}

impl CorollaryCase {
    pub fn any(&self) -> bool {
        self.residue || self.two_row || self.three_row
    }

    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.residue {
            parts.push("residue");
        }
        if self.two_row {
            parts.push("two-row");
        }
        if self.three_row {
            parts.push("three-row");
        }
        if parts.is_empty() {
            "none".into()
        } else {
            parts.join("+")
        }
    }
}

/// Evaluate the three residue tests at `(a, b)`.
pub fn corollary_case(a: usize, b: usize) -> CorollaryCase {
    let s = a + b;
    let (si, ai) = (s as i64, a as i64);
    CorollaryCase {
        residue: (s % 8 == 0 || s % 8 == 2) && a >= 6 && b >= 4,
        two_row: s % 4 == 2 && binom_odd_signed(si - 3, ai - 3),
        three_row: s % 4 == 0 && binom_odd_signed(si - 9, ai - 5),
    }
}

/// One grid cell of the decomposability survey.
#[derive(Debug, Clone)]
pub struct SurveyRecord {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    /// 2-regular summand labels, descending.
    pub summands: Vec<Partition>,
    /// The closed-form flag — [`CorollaryCase::any`], computed without
    /// looking at `summands`.  That it always equals
    /// `!summands.is_empty()` is a theorem, checked in the tests.
    pub corollary_flag: bool,
    pub corollary_case: CorollaryCase,
}

/// Survey one `(a, b)` cell: enumerate the summands and evaluate the
/// residue tests independently.
pub fn survey(a: usize, b: usize) -> SurveyRecord {
    let summands =
        summands(&lambda_partition(a, b)).expect("grid parameters build a valid λ");
    let case = corollary_case(a, b);
    SurveyRecord {
        a,
        b,
        n: a + b + 3,
        summands,
        corollary_flag: case.any(),
        corollary_case: case,
    }
}

/// Survey the whole grid of even `4 ≤ a ≤ a_max`, `2 ≤ b ≤ b_max`, in
/// parallel, ordered by `(a, b)`.
pub fn survey_grid(a_max: usize, b_max: usize) -> Vec<SurveyRecord> {
    let cells: Vec<(usize, usize)> = (4..=a_max)
        .step_by(2)
        .flat_map(|a| (2..=b_max).step_by(2).map(move |b| (a, b)))
        .collect();
    cells.into_par_iter().map(|(a, b)| survey(a, b)).collect()
}

/// The guaranteed summand found (or not) for one `(n, a)` in the
/// existence classes `n ≡ 3, 5 (mod 8)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceRecord {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    /// An irreducible summand label of `S^(a, 3, 1^{n−3−a})`.
    pub witness: Option<Partition>,
}

/// For `n ≡ 3 (mod 8)`, find for every even `6 ≤ a ≤ n−7` a label
/// `(u, v, 2)` with `v ≡ 1 (mod 4)`, `v ≥ 5`,
/// `u−v ≡ −1 (mod 2^{l(v−2)})` (irreducibility) and `C(u−v, u−a)` odd;
/// for `n ≡ 5 (mod 8)` and even `8 ≤ a ≤ n−7`, a label `(u, v)` with
/// `v ≡ 3 (mod 4)`, `v ≥ 7`, `u−v ≡ −1 (mod 2^{l(v)})` and `C(u−v, u−a)`
/// odd.  Here `l(k)` is the smallest `l` with `2^l > k`.  Other residues
/// are errors.  The searches always succeed; `witness: None` would report
/// a counterexample.
pub fn existence_search(n: usize) -> Result<Vec<ExistenceRecord>> {
    let (a_min, v_min, three_part) = match n % 8 {
        3 => (6, 5, true),
        5 => (8, 7, false),
        r => {
            return Err(Error::Guard(format!(
                "existence search covers n ≡ 3 or 5 (mod 8); n = {n} has residue {r}"
            )))
        }
    };
    let shrink = if three_part { 2 } else { 0 };
    let mut out = Vec::new();
    for a in (a_min..=n.saturating_sub(7)).step_by(2) {
        let witness = (v_min..)
            .step_by(4)
            .take_while(|&v| 2 * v < n - shrink)
            .find_map(|v| {
                let u = n - shrink - v;
                let modulus = 1usize << l_value(v - shrink);
                let hit = (u - v) % modulus == modulus - 1
                    && u >= a
                    && binom_odd(u - v, u - a);
                hit.then(|| {
                    if three_part {
                        Partition::of(&[u, v, 2])
                    } else {
                        Partition::of(&[u, v])
                    }
                })
            });
        if let Some(w) = &witness {
            debug_assert!(w.is_irreducible_specht(), "witness {w} must be irreducible");
        }
        out.push(ExistenceRecord {
            n,
            a,
            b: n - 3 - a,
            witness,
        });
    }
    Ok(out)
}

/// Closed-form tableau counts for the two-row σ pattern: the total
/// `C(u−v, a−v) · C(u+v−a−1, 2)`, and the number whose second-row middle
/// entry exceeds `v`, `C(u−v, a−v) · C(u−a, 2)`.
pub fn count_tableaux(u: usize, v: usize, a: usize) -> (u128, u128) {
    let (ui, vi, ai) = (u as i64, v as i64, a as i64);
    let stars = binom_count(ui - vi, ai - vi);
    (
        stars.saturating_mul(binom_count(ui + vi - ai - 1, 2)),
        stars.saturating_mul(binom_count(ui - ai, 2)),
    )
}
