//! Cross-checks between the symbolic homomorphism engine and the explicit
//! matrix oracle: generator equivariance of the Θ matrices, dimension
//! formulas along three independent routes, transposed duality of the
//! brute-force Hom dimensions, and Specht-subspace membership of the
//! witness maps used by the summand certificates.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specht::oracle::rep::SpechtRep;
use specht::oracle::specht::{SpechtSubspace, AMBIENT_MAX_DIM};
use specht::oracle::tabloid::{
    normalize, polytabloid, psi_apply, psi_codomain, theta_apply, theta_matrix, TabloidSpace,
};
use specht::oracle::verify::{BruteForce, SOLVE_TARGET_MAX};
use specht::partition::multinomial;
use specht::tableau::Entry;
use specht::{
    build_c, build_sigma, composite_reference, hom_dim_dual, hom_space, Composition, GF2Combo,
    GF2Matrix, HomDim, Partition, SummandFamily, SummandParams, Tableau,
};

fn pt(parts: &[usize]) -> Partition {
    Partition::of(parts)
}

/// The row-reading standard tableau: rows filled consecutively 1..n.
fn natural_tableau(shape: &Partition) -> Tableau {
    let mut rows: Vec<Vec<Entry>> = Vec::new();
    let mut next: Entry = 1;
    for i in 0..shape.len() {
        let row: Vec<Entry> = (0..shape.get(i))
            .map(|_| {
                let v = next;
                next += 1;
                v
            })
            .collect();
        rows.push(row);
    }
    Tableau::new(rows)
}

/// A uniformly random row-content assignment of `ctype` values to rows of
/// `shape`; every such assignment is row-standard once rows are sorted.
fn random_tableau(shape: &Partition, ctype: &Partition, rng: &mut ChaCha8Rng) -> Tableau {
    let mut values: Vec<Entry> = Vec::new();
    for (i, &m) in ctype.parts().iter().enumerate() {
        values.extend(std::iter::repeat((i + 1) as Entry).take(m));
    }
    values.shuffle(rng);
    let mut rows: Vec<Vec<Entry>> = Vec::new();
    let mut at = 0;
    for i in 0..shape.len() {
        rows.push(values[at..at + shape.get(i)].to_vec());
        at += shape.get(i);
    }
    Tableau::new(rows)
}

/// Number of tabloids a single `theta_apply` emits: the product over rows
/// of the multinomial of the row's value multiplicities (independent of
/// the source tabloid).
fn terms_per_apply(t: &Tableau) -> u128 {
    let mut prod: u128 = 1;
    for r in 0..t.num_rows() {
        let row = t.row(r);
        let mut counts: Vec<usize> = Vec::new();
        let mut i = 0;
        while i < row.len() {
            let v = row[i];
            let mut c = 0;
            while i < row.len() && row[i] == v {
                c += 1;
                i += 1;
            }
            counts.push(c);
        }
        prod = prod.saturating_mul(multinomial(&counts));
    }
    prod
}

fn image_term_estimate(combo: &GF2Combo, support_len: usize) -> u128 {
    let per_term: u128 = combo.support().map(terms_per_apply).sum();
    per_term.saturating_mul(support_len as u128)
}

/// Sparse image of a whole combo on a sparse vector, accumulated in one
/// batch (sort + cancel pairs) rather than by repeated merging.
fn combo_image(combo: &GF2Combo, src: &TabloidSpace, dst: &TabloidSpace, vec: &[u64]) -> Vec<u64> {
    let mut all: Vec<u64> = Vec::new();
    for t in combo.support() {
        for &idx in vec {
            all.extend(theta_apply(t, src, dst, idx));
        }
    }
    normalize(all)
}

/// Batched kernel-intersection membership test for possibly large sparse
/// vectors: `vec` lies in `S^λ ⊆ M^λ` iff every `ψ_{d,t}` kills it.
fn kernel_intersection_member(lambda: &Partition, space: &TabloidSpace, vec: &[u64]) -> bool {
    let lc = Composition::from(lambda);
    for d in 1..lambda.len() {
        for t in 1..=lambda.get(d) {
            let nu = psi_codomain(&lc, d, t);
            let dst = TabloidSpace::new(&nu).expect("same n");
            let mut all: Vec<u64> = Vec::new();
            for &idx in vec {
                all.extend(psi_apply(d, t, space, &dst, idx));
            }
            if !normalize(all).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Check `Θ(x·s_k) = Θ(x)·s_k` on every basis tabloid for every adjacent
/// transposition, given the cached sparse images `ys[i]`.
fn check_equivariance(
    t: &Tableau,
    src: &TabloidSpace,
    dst: &TabloidSpace,
    ys: &[Vec<u64>],
) {
    let n = src.n();
    for k in 1..n {
        let pd = dst.transpose_perm(k);
        for i in 0..src.dim() {
            let j = src.transpose_apply(k, i);
            let mut moved: Vec<u64> = ys[i as usize].iter().map(|&y| pd[y as usize] as u64).collect();
            moved.sort_unstable();
            assert_eq!(
                moved, ys[j as usize],
                "Θ for {t:?} fails to commute with s_{k} at tabloid {i}"
            );
        }
    }
}

#[test]
fn theta_images_commute_with_generators_exhaustively() {
    for n in 2..=7 {
        let shapes = Partition::all(n);
        for shape in &shapes {
            let src = TabloidSpace::new(&Composition::from(shape)).unwrap();
            for ctype in &shapes {
                let dst = TabloidSpace::new(&Composition::from(ctype)).unwrap();
                for t in Tableau::row_standard(shape, &Composition::from(ctype)) {
                    let ys: Vec<Vec<u64>> = (0..src.dim())
                        .map(|i| theta_apply(&t, &src, &dst, i))
                        .collect();
                    check_equivariance(&t, &src, &dst, &ys);
                }
            }
        }
    }
}

#[test]
fn theta_images_commute_with_generators_spot_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x07ac1e);
    for n in 8..=13 {
        let shapes = Partition::all(n);
        let mut done = 0;
        while done < 12 {
            let shape = shapes.choose(&mut rng).unwrap();
            let ctype = shapes.choose(&mut rng).unwrap();
            let t = random_tableau(shape, ctype, &mut rng);
            if terms_per_apply(&t) > 20_000 {
                continue;
            }
            let src = TabloidSpace::new(&Composition::from(shape)).unwrap();
            let dst = TabloidSpace::new(&Composition::from(ctype)).unwrap();
            for _ in 0..20 {
                let i = rng.gen_range(0..src.dim());
                let k = rng.gen_range(1..n);
                let yi = theta_apply(&t, &src, &dst, i);
                let yj = theta_apply(&t, &src, &dst, src.transpose_apply(k, i));
                let mut moved: Vec<u64> =
                    yi.iter().map(|&y| dst.transpose_apply(k, y)).collect();
                moved.sort_unstable();
                assert_eq!(moved, yj, "equivariance spot check failed at n={n}");
            }
            done += 1;
        }
    }
}

#[test]
fn identity_pattern_theta_is_the_identity_matrix() {
    for n in 1..=7 {
        for shape in Partition::all(n) {
            let space = TabloidSpace::new(&Composition::from(&shape)).unwrap();
            let t = natural_tableau(&shape);
            // Relabel each row to its own index: row j filled with j+1.
            let rows: Vec<Vec<Entry>> = (0..shape.len())
                .map(|i| vec![(i + 1) as Entry; shape.get(i)])
                .collect();
            let ident = Tableau::new(rows);
            assert_eq!(ident.shape(), t.shape());
            let m = theta_matrix(&ident, &space, &space);
            assert_eq!(m, GF2Matrix::identity(space.dim() as usize));
        }
    }
}

#[test]
fn specht_dimensions_match_hook_formula() {
    // Route 1: the standard-tableau count (pure combinatorics).
    for n in 1..=12 {
        for shape in Partition::all(n) {
            let hook = shape.hook_dim();
            assert_eq!(
                Tableau::standard(&shape).len() as u128,
                hook,
                "standard count vs hook product for {shape}"
            );
        }
    }
    // Route 2: the rank of the polytabloid row space inside M^λ, whenever
    // the ambient space fits the resource guard.
    let mut ranked = 0;
    for n in 1..=12 {
        for shape in Partition::all(n) {
            let ambient = TabloidSpace::new(&Composition::from(&shape)).unwrap();
            if ambient.dim() > AMBIENT_MAX_DIM {
                continue;
            }
            let sub = SpechtSubspace::new(&shape).unwrap();
            assert_eq!(sub.dim() as u128, shape.hook_dim(), "rank for {shape}");
            ranked += 1;
        }
    }
    assert!(ranked > 120, "ambient guard left too few rank checks: {ranked}");
    // Route 3: the straightening representation, which never builds the
    // ambient space.
    for n in 1..=11 {
        for shape in Partition::all(n) {
            let rep = SpechtRep::from_straightening(&shape).unwrap();
            assert_eq!(rep.dim() as u128, shape.hook_dim(), "straightening {shape}");
        }
    }
    // Frozen values.
    assert_eq!(pt(&[6, 3]).hook_dim(), 48);
    assert_eq!(pt(&[4, 3, 1, 1]).hook_dim(), 216);
    let m4311 = TabloidSpace::new(&Composition::of(&[4, 3, 1, 1])).unwrap();
    assert_eq!(m4311.dim(), 2520);
}

#[test]
fn bruteforce_hom_dims_respect_transposed_duality() {
    for n in 2..=11 {
        let shapes = Partition::all(n);
        let mut bf = BruteForce::new();
        let mut skipped = 0;
        for mu in &shapes {
            for lambda in &shapes {
                let dual = (lambda.conjugate(), mu.conjugate());
                // Each unordered identity once; the solver guard is
                // conjugation-invariant, so both sides skip together.
                if (mu, lambda) > (&dual.0, &dual.1) {
                    continue;
                }
                if mu.hook_dim() > SOLVE_TARGET_MAX && lambda.hook_dim() > SOLVE_TARGET_MAX {
                    skipped += 1;
                    continue;
                }
                let d1 = bf.hom_dim(mu, lambda).unwrap();
                let d2 = bf.hom_dim(&dual.0, &dual.1).unwrap();
                assert_eq!(d1, d2, "duality broken at ({mu}, {lambda})");
            }
        }
        if n < 11 {
            assert_eq!(skipped, 0, "unexpected solver-bound skips at n={n}");
        }
    }
}

#[test]
fn hom_engine_agrees_with_bruteforce_on_two_regular_sources() {
    for n in 2..=11 {
        let shapes = Partition::all(n);
        let mut bf = BruteForce::new();
        for mu in shapes.iter().filter(|m| m.two_regular()) {
            for lambda in &shapes {
                if mu.hook_dim() > SOLVE_TARGET_MAX && lambda.hook_dim() > SOLVE_TARGET_MAX {
                    continue;
                }
                let hs = hom_space(mu, lambda);
                assert!(hs.complete);
                let brute = bf.hom_dim(mu, lambda).unwrap();
                assert_eq!(hs.dim(), brute, "engine vs oracle at ({mu}, {lambda})");
            }
        }
    }
}

#[test]
fn frozen_hom_values_and_schur_facts() {
    let mut bf = BruteForce::new();
    // The two hand-checked dimension-one pairs, and their agreement with
    // the conjugate-side engine computation.
    assert_eq!(bf.hom_dim(&pt(&[6, 3]), &pt(&[4, 3, 1, 1])).unwrap(), 1);
    assert_eq!(bf.hom_dim(&pt(&[6, 3]), &pt(&[4, 2, 2, 1])).unwrap(), 1);
    assert_eq!(
        hom_dim_dual(&pt(&[4, 3, 1, 1]), &pt(&[4, 2, 2, 1]).conjugate()),
        HomDim::Exact(1)
    );
    // Schur facts for irreducible Specht labels.
    for mu in Partition::all(9)
        .into_iter()
        .filter(|m| m.is_irreducible_specht())
    {
        if mu.hook_dim() > SOLVE_TARGET_MAX {
            continue;
        }
        assert_eq!(bf.hom_dim(&mu, &mu).unwrap(), 1, "End(S^{mu})");
        let report = bf.verify_summand(&mu, &mu).unwrap();
        assert!(report.is_summand, "a module is a summand of itself");
    }
    for n in 2..=10 {
        assert_eq!(bf.endo_dim(&pt(&[n])).unwrap(), 1);
    }
    // The trivial module is not a summand of the flagship module.
    let report = bf.verify_summand(&pt(&[4, 3, 1, 1]), &pt(&[9])).unwrap();
    assert!(!report.is_summand);
    assert_eq!(report.maps_in, 0);
}

/// Resource cap for explicit sparse images of witness maps; estimated
/// term counts above it are skipped (only the n = 13, (a,b) = (4,6) σ
/// image exceeds it).
const IMAGE_TERM_CAP: u128 = 40_000_000;

fn uv2_params_up_to(n_max: usize) -> Vec<SummandParams> {
    let mut out = Vec::new();
    for n in (9..=n_max).step_by(2) {
        for a in (4..=n - 5).step_by(2) {
            let b = n - 3 - a;
            if b < 2 {
                continue;
            }
            out.extend(
                SummandParams::all_sigma_admissible(a, b)
                    .into_iter()
                    .filter(|p| p.family == SummandFamily::ThreeRow),
            );
        }
    }
    out
}

#[test]
fn sigma_three_row_image_lands_in_conjugate_specht_subspace() {
    let mut checked = 0;
    let mut skipped = 0;
    for p in uv2_params_up_to(13) {
        let sigma = build_sigma(p).unwrap();
        let lambda = p.lambda();
        let mu_c = p.mu_conjugate();
        let src = TabloidSpace::new(&Composition::from(&lambda)).unwrap();
        let dst = TabloidSpace::new(&Composition::from(&mu_c)).unwrap();
        let e = polytabloid(&src, &natural_tableau(&lambda));
        if image_term_estimate(&sigma, e.len()) > IMAGE_TERM_CAP {
            skipped += 1;
            continue;
        }
        let img = combo_image(&sigma, &src, &dst, &e);
        // σ is a nonzero homomorphism on the cyclic module, so it cannot
        // kill the generator; its image must lie in the Specht submodule.
        assert!(!img.is_empty(), "σ killed the generator at {p:?}");
        assert!(
            kernel_intersection_member(&mu_c, &dst, &img),
            "σ image escapes the Specht subspace at {p:?}"
        );
        checked += 1;
    }
    assert_eq!(checked, 6);
    assert_eq!(skipped, 1);
}

#[test]
fn three_row_inclusion_image_lands_in_target_specht_subspace() {
    let mut checked = 0;
    for p in uv2_params_up_to(13) {
        let gamma = build_c(p).unwrap();
        let mu = p.mu();
        let lambda = p.lambda();
        let src = TabloidSpace::new(&Composition::from(&mu)).unwrap();
        let dst = TabloidSpace::new(&Composition::from(&lambda)).unwrap();
        let e = polytabloid(&src, &natural_tableau(&mu));
        assert!(image_term_estimate(&gamma, e.len()) <= IMAGE_TERM_CAP);
        let img = combo_image(&gamma, &src, &dst, &e);
        assert!(!img.is_empty(), "inclusion killed the generator at {p:?}");
        assert!(
            kernel_intersection_member(&lambda, &dst, &img),
            "inclusion image escapes the Specht subspace at {p:?}"
        );
        checked += 1;
    }
    assert_eq!(checked, 7);
}

#[test]
fn reference_composite_is_nonzero_on_the_source_specht_module() {
    let mut checked = 0;
    for n in [9usize, 11, 13] {
        for a in (4..=n - 5).step_by(2) {
            let b = n - 3 - a;
            if b < 2 {
                continue;
            }
            for p in SummandParams::all_sigma_admissible(a, b) {
                let d = composite_reference(p);
                let mu = p.mu();
                let mu_c = p.mu_conjugate();
                let src = TabloidSpace::new(&Composition::from(&mu)).unwrap();
                let dst = TabloidSpace::new(&Composition::from(&mu_c)).unwrap();
                let e = polytabloid(&src, &natural_tableau(&mu));
                if image_term_estimate(&d, e.len()) > IMAGE_TERM_CAP {
                    continue;
                }
                let img = combo_image(&d, &src, &dst, &e);
                assert!(
                    !img.is_empty(),
                    "reference composite vanished on the generator at {p:?}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked >= 10, "too few in-cap composites: {checked}");
}
