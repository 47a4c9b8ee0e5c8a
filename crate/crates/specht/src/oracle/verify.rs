//! Brute-force answers about hom spaces and direct summands.
//!
//! Everything here works on explicit matrices and linear algebra only — no
//! tableau combinatorics — so it is an independent referee for the
//! homomorphism calculus.
//!
//! The solver always spins the *larger* module.  A hom space with a large
//! target is converted through vector-space duality: over GF(2) the dual of
//! a Specht module is again a cyclic module (the conjugate Specht module),
//! and transposing matrices turns `Hom((S^λ)*, (S^μ)*)` into
//! `Hom(S^μ, S^λ)` without leaving the original coordinate systems.

use std::collections::HashMap;

use super::rep::SpechtRep;
use super::spin::{find_cyclic_generator, spin, SpinEvents};
use crate::gf2::bit_flip;
use crate::partition::Partition;
use crate::{Error, GF2Matrix, Result};

/// Size guard for the whole brute-force layer.
pub const BRUTE_MAX_N: usize = 13;

/// Largest dimension allowed for the *target* of an equivariant solve; the
/// solver keeps one dense target-square matrix per basis vector of the
/// source, so this bounds both memory and time.
pub const SOLVE_TARGET_MAX: u128 = 1_500;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SummandReport {
    /// dim Hom(S^μ, S^λ)
    pub maps_in: usize,
    /// dim Hom(S^λ, S^μ)
    pub maps_out: usize,
    pub is_summand: bool,
}

/// Caches representations and spin logs so that one module can be tested
/// against many partners without re-spinning.
#[derive(Default)]
pub struct BruteForce {
    reps: HashMap<Partition, SpechtRep>,
    duals: HashMap<Partition, SpechtRep>,
    spins: HashMap<Partition, SpinEvents>,
    dual_spins: HashMap<Partition, SpinEvents>,
}

impl BruteForce {
    pub fn new() -> BruteForce {
        BruteForce::default()
    }

    fn ensure_rep(&mut self, lam: &Partition) -> Result<()> {
        if !self.reps.contains_key(lam) {
            self.reps
                .insert(lam.clone(), SpechtRep::from_straightening(lam)?);
        }
        Ok(())
    }

    fn ensure_dual(&mut self, lam: &Partition) -> Result<()> {
        self.ensure_rep(lam)?;
        if !self.duals.contains_key(lam) {
            let d = self.reps[lam].dual();
            self.duals.insert(lam.clone(), d);
        }
        Ok(())
    }

    /// Spin log of `S^λ` from its first standard polytabloid.
    fn ensure_spin(&mut self, lam: &Partition) -> Result<()> {
        self.ensure_rep(lam)?;
        if !self.spins.contains_key(lam) {
            let rep = &self.reps[lam];
            let mut v0 = vec![0u64; rep.words()];
            bit_flip(&mut v0, 0);
            let ev = spin(rep, &v0).expect("a polytabloid generates its Specht module");
            self.spins.insert(lam.clone(), ev);
        }
        Ok(())
    }

    /// Spin log of `(S^λ)*` from a searched cyclic functional.
    fn ensure_dual_spin(&mut self, lam: &Partition) -> Result<()> {
        self.ensure_dual(lam)?;
        if !self.dual_spins.contains_key(lam) {
            let rep = &self.duals[lam];
            let v0 = find_cyclic_generator(rep);
            let ev = spin(rep, &v0).expect("the found vector was verified cyclic");
            self.dual_spins.insert(lam.clone(), ev);
        }
        Ok(())
    }

    fn guard(&self, mu: &Partition, lambda: &Partition) -> Result<()> {
        if mu.n() != lambda.n() {
            return Err(Error::Guard(format!(
                "hom spaces need partitions of the same integer, got {mu} and {lambda}"
            )));
        }
        if mu.n() > BRUTE_MAX_N {
            return Err(Error::Guard(format!(
                "brute-force checks are limited to n ≤ {BRUTE_MAX_N}, got n = {}",
                mu.n()
            )));
        }
        Ok(())
    }

    /// dim Hom(S^μ, S^λ) by explicit linear algebra.
    pub fn hom_dim(&mut self, mu: &Partition, lambda: &Partition) -> Result<usize> {
        self.guard(mu, lambda)?;
        if lambda.hook_dim() <= SOLVE_TARGET_MAX {
            self.ensure_rep(lambda)?;
            self.ensure_spin(mu)?;
            let tgt = self.reps[lambda].dense_gens();
            Ok(self.spins[mu].hom_dim(&tgt))
        } else if mu.hook_dim() <= SOLVE_TARGET_MAX {
            self.ensure_dual(mu)?;
            self.ensure_dual_spin(lambda)?;
            let tgt = self.duals[mu].dense_gens();
            Ok(self.dual_spins[lambda].hom_dim(&tgt))
        } else {
            Err(Error::Guard(format!(
                "both S^{mu} and S^{lambda} exceed the solver target bound {SOLVE_TARGET_MAX}"
            )))
        }
    }

    /// Basis of Hom(S^μ, S^λ) as matrices over the standard-polytabloid
    /// bases (rows map as `v ↦ v·M`).
    pub fn hom_maps(&mut self, mu: &Partition, lambda: &Partition) -> Result<Vec<GF2Matrix>> {
        self.guard(mu, lambda)?;
        if lambda.hook_dim() <= SOLVE_TARGET_MAX {
            self.ensure_rep(lambda)?;
            self.ensure_spin(mu)?;
            let tgt = self.reps[lambda].dense_gens();
            Ok(self.spins[mu].hom_solve(&tgt))
        } else if mu.hook_dim() <= SOLVE_TARGET_MAX {
            self.ensure_dual(mu)?;
            self.ensure_dual_spin(lambda)?;
            let tgt = self.duals[mu].dense_gens();
            Ok(self.dual_spins[lambda]
                .hom_solve(&tgt)
                .into_iter()
                .map(|m| m.transpose())
                .collect())
        } else {
            Err(Error::Guard(format!(
                "both S^{mu} and S^{lambda} exceed the solver target bound {SOLVE_TARGET_MAX}"
            )))
        }
    }

    /// Decide whether `S^μ` (required irreducible) is a direct summand of
    /// `S^λ`, by searching for maps `γ: S^μ → S^λ` and `δ: S^λ → S^μ` with
    /// `δ∘γ ≠ 0`: a nonzero endomorphism of an irreducible is invertible,
    /// so such a pair splits `γ` off; conversely a split pair composes to
    /// the identity.  By bilinearity it suffices to test basis pairs.
    pub fn verify_summand(&mut self, lambda: &Partition, mu: &Partition) -> Result<SummandReport> {
        self.guard(mu, lambda)?;
        if !mu.is_irreducible_specht() {
            return Err(Error::Guard(format!(
                "summand verification requires an irreducible candidate, S^{mu} is not"
            )));
        }
        let gamma = self.hom_maps(mu, lambda)?;
        let delta = self.hom_maps(lambda, mu)?;
        let dmu = mu.hook_dim() as usize;
        let zero = GF2Matrix::zero(dmu, dmu);
        let is_summand = gamma
            .iter()
            .any(|g| delta.iter().any(|d| g.mul(d) != zero));
        Ok(SummandReport {
            maps_in: gamma.len(),
            maps_out: delta.len(),
            is_summand,
        })
    }

    /// dim End(S^λ).
    pub fn endo_dim(&mut self, lambda: &Partition) -> Result<usize> {
        self.hom_dim(lambda, lambda)
    }
}

pub fn hom_dim_bruteforce(mu: &Partition, lambda: &Partition) -> Result<usize> {
    BruteForce::new().hom_dim(mu, lambda)
}

pub fn verify_summand(lambda: &Partition, mu: &Partition) -> Result<SummandReport> {
    BruteForce::new().verify_summand(lambda, mu)
}

pub fn endo_dim(lambda: &Partition) -> Result<usize> {
    BruteForce::new().endo_dim(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn frozen_hom_dimensions() {
        assert_eq!(hom_dim_bruteforce(&pt(&[6, 3]), &pt(&[4, 3, 1, 1])).unwrap(), 1);
        assert_eq!(hom_dim_bruteforce(&pt(&[6, 3]), &pt(&[4, 2, 2, 1])).unwrap(), 1);
    }

    #[test]
    fn endomorphism_dimensions() {
        assert_eq!(endo_dim(&pt(&[7])).unwrap(), 1);
        assert_eq!(endo_dim(&pt(&[4, 1])).unwrap(), 1);
        assert_eq!(endo_dim(&pt(&[2, 2])).unwrap(), 1);
        assert!(endo_dim(&pt(&[4, 3, 1, 1])).unwrap() >= 2);
    }

    #[test]
    fn flagship_summand_is_certified() {
        let report = verify_summand(&pt(&[4, 3, 1, 1]), &pt(&[6, 3])).unwrap();
        assert!(report.is_summand);
        assert_eq!(report.maps_in, 1);
        assert_eq!(report.maps_out, 1);
    }

    #[test]
    fn trivial_module_is_not_a_summand_of_the_flagship() {
        let report = verify_summand(&pt(&[4, 3, 1, 1]), &pt(&[9])).unwrap();
        assert!(!report.is_summand);
    }

    #[test]
    fn an_irreducible_is_a_summand_of_itself() {
        for lam in [pt(&[4, 1]), pt(&[2, 2]), pt(&[5])] {
            let report = verify_summand(&lam, &lam).unwrap();
            assert!(report.is_summand);
            assert_eq!(report.maps_in, 1);
        }
    }

    #[test]
    fn reducible_candidates_are_rejected() {
        assert!(verify_summand(&pt(&[4, 3, 1, 1]), &pt(&[3, 3, 3])).is_err());
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        assert!(hom_dim_bruteforce(&pt(&[2, 1]), &pt(&[2, 2])).is_err());
    }

    #[test]
    #[ignore = "several minutes; exercised by the acceptance suite"]
    fn largest_verification_pair() {
        // The biggest module the summand checks ever touch: dim S = 9360.
        let lam = pt(&[6, 3, 1, 1, 1, 1]);
        let mu = pt(&[10, 3]);
        let report = verify_summand(&lam, &mu).unwrap();
        assert!(report.is_summand);
    }

    #[test]
    fn caching_is_transparent() {
        let mut bf = BruteForce::new();
        let a = bf.hom_dim(&pt(&[4, 1]), &pt(&[3, 2])).unwrap();
        let b = bf.hom_dim(&pt(&[4, 1]), &pt(&[3, 2])).unwrap();
        assert_eq!(a, b);
        let c = bf.hom_dim(&pt(&[4, 1]), &pt(&[3, 1, 1])).unwrap();
        assert_eq!(c, hom_dim_bruteforce(&pt(&[4, 1]), &pt(&[3, 1, 1])).unwrap());
    }
}
