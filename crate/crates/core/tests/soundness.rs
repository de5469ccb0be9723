mod support;

use m4core::axioms::{match_axiom, Catalogue};
use m4core::cs::{bundled_proof, cs_equation, CsObjects, SHIPPED};
use m4core::proof::{search_equality, verify_proof, PastingProof, RewriteStep, SearchBudget, SearchOutcome};
use m4core::term::Path;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::time::Duration;

fn small_budget() -> SearchBudget {
    SearchBudget { max_steps: 4, max_states: 400, timeout: Duration::from_secs(5), ..SearchBudget::default() }
}

#[test]
fn random_instances_are_recognised_and_proved() {
    let mut rng = StdRng::seed_from_u64(11);
    for negation in [false, true] {
        let cat = Catalogue::standard(negation);
        for _ in 0..60 {
            let (s, sub, eq) = support::random_instance(&mut rng, cat);
            let one = PastingProof {
                steps: vec![RewriteStep {
                    path: Path::root(),
                    schema_id: s.id.clone(),
                    direction: m4core::axioms::Direction::Forward,
                    subst: sub,
                }],
            };
            verify_proof(cat, &eq, &one).unwrap_or_else(|e| panic!("{}: {e}", s.id));
            assert!(match_axiom(cat, &eq).is_some(), "{} instance not recognised: {eq}", s.id);
            if let (SearchOutcome::Proved(p), _) = search_equality(cat, &eq, &small_budget()) {
                verify_proof(cat, &eq, &p).unwrap();
            }
        }
    }
}

#[test]
fn corrupted_certificates_are_rejected() {
    let mut rng = StdRng::seed_from_u64(12);
    let cat = Catalogue::standard(false);
    let mut checked = 0;
    for n in SHIPPED {
        let eq = cs_equation(n, &CsObjects::default()).unwrap();
        let p = bundled_proof(n).unwrap();
        assert!(support::strictly_moving(cat, &eq, &p));
        for _ in 0..3 {
            for m in support::mutants(&mut rng, cat, &p) {
                assert!(verify_proof(cat, &eq, &m).is_err(), "CS ({n}) mutant accepted");
                checked += 1;
            }
        }
    }
    assert!(checked >= 50);
}
