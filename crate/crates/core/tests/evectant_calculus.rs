use binform_core::covariants::{express_in_compounds, generic_form, hermite_from, Covariant, QuinticCatalog, ThetaName};
use binform_core::evectants::*;

fn small_catalog(cat: &QuinticCatalog) -> Vec<(&'static str, Covariant)> {
    use ThetaName::*;
    let mut v = vec![("F", cat.f().clone())];
    for (name, t) in [("theta22", T22), ("theta26", T26), ("theta33", T33), ("theta39", T39), ("theta40", T40), ("theta44", T44), ("theta51", T51)] {
        v.push((name, cat.theta(t).clone()));
    }
    v
}

#[test]
fn theorem_matches_direct_extraction_on_catalog_pairs() {
    let cat = QuinticCatalog::new();
    let entries = small_catalog(&cat);
    let mut checked = 0;
    for (na, a) in &entries {
        for (nb, b) in &entries {
            if a.degree() + b.degree() > 6 {
                continue;
            }
            let sa = evectant_sequence(a).unwrap();
            let sb = evectant_sequence(b).unwrap();
            for r in 0..=a.order().min(b.order()) {
                let via_theorem = transvectant_evectants(&sa, &sb, r).unwrap();
                let direct = evectant_sequence(&a.transvect(b, r)).unwrap();
                assert_eq!(via_theorem, direct, "({}, {})_{}", na, nb, r);
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn iterated_pipeline_from_the_ground_form() {
    // every covariant built from up to four transvections of F
    let f = generic_form(5);
    let g = ground_evectants(5);
    let mut level = vec![g];
    for _ in 0..3 {
        let mut next = Vec::new();
        for seq in &level {
            for r in 0..=seq.source().order().min(5) {
                let t = seq.source().transvect(&f, r);
                if t.is_zero() {
                    continue;
                }
                let via = transvectant_evectants(seq, &ground_evectants(5), r).unwrap();
                assert_eq!(via, evectant_sequence(&t).unwrap());
                next.push(via);
            }
        }
        level = next;
    }
    assert!(!level.is_empty());
}

#[test]
fn identities_for_catalog_covariants() {
    let cat = QuinticCatalog::new();
    for t in ThetaName::ALL {
        let c = cat.theta(t);
        assert!(covariance_pde_check(c), "{}", t);
        let seq = evectant_sequence(c).unwrap();
        assert!(seq.is_consistent(), "{}", t);
        assert!(omega_identity_check(&seq), "{}", t);
    }
}

#[test]
fn invariants_have_orthogonal_evectants() {
    let cat = QuinticCatalog::new();
    for t in [ThetaName::T40, ThetaName::T80] {
        let e = classical_evectant(cat.theta(t)).unwrap();
        assert_eq!(e.transvect(cat.f(), 5).form(), cat.theta(t).form());
        assert!(e.transvect(cat.f(), 4).is_zero());
    }
}

#[test]
fn hermite_evectant_routes_agree() {
    let cat = QuinticCatalog::new();
    let h = hermite_from(&cat);
    let direct = classical_evectant(&h).unwrap();
    let fast = hermite_evectants(PowerPath::Shortcut);
    assert_eq!(fast.source(), &h);
    assert_eq!(fast.components(), std::slice::from_ref(&direct));
    assert_eq!(direct.transvect(cat.f(), 5).form(), h.form());
    assert!(direct.transvect(cat.f(), 4).is_zero());
}

#[test]
fn catalog_covariants_are_compound_transvectant_combinations() {
    let cat = QuinticCatalog::new();
    for t in ThetaName::ALL {
        let c = cat.theta(t);
        if c.degree() > 4 {
            continue;
        }
        let combo = express_in_compounds(c).unwrap_or_else(|e| panic!("{}: {}", t, e));
        assert!(!combo.is_empty());
    }
}
