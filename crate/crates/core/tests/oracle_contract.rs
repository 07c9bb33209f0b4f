use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strongmax::objects::{apply_witness, check, delta, Direction, Kind, Presentation};
use strongmax::oracles::{improve, improve_edgecover_h2, improve_matching_h1, ORACLE_CONSTRUCTIONS};
use strongmax::sample::{self, SAMPLE_BOUND};
use strongmax::universe::Construction;

const RUNS: usize = 150;

#[test]
fn every_oracle_returns_an_applicable_strict_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for c in ORACLE_CONSTRUCTIONS {
        for run in 0..RUNS {
            let p = sample::oracle_input(&mut rng, c);
            assert!(check(&p, SAMPLE_BOUND).is_ok());
            let imp = improve(&p, SAMPLE_BOUND).unwrap_or_else(|e| panic!("{c} run {run}: {e}\n{p:?}"));
            let w = &imp.witness;
            assert_eq!(w.direction(), Kind::of(c).direction());
            assert!(w.is_strict(), "{c} run {run}: {:?}", w.delta());
            let q = apply_witness(&p, w, SAMPLE_BOUND).unwrap_or_else(|e| panic!("{c} run {run}: {e}\n{p:?}"));
            assert_eq!(delta(&p, &q).unwrap(), w.delta(), "{c} run {run}");
        }
    }
}

#[test]
fn gadget_accounting_matches_the_base_exchange() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..RUNS {
        let m = sample::h1_matching(&mut rng);
        let imp = improve_matching_h1(&m, SAMPLE_BOUND).unwrap();
        if let Some(star) = &imp.star {
            assert_eq!(imp.witness.gain(), star.gain());
            assert!(star.gain() > 0);
        } else {
            assert!(imp.repaired.is_some());
        }
        let c = sample::h2_cover(&mut rng);
        let imp = improve_edgecover_h2(&c, SAMPLE_BOUND).unwrap();
        if let Some(star) = &imp.star {
            assert_eq!(imp.witness.gain(), star.gain());
            assert!(star.gain() < 0);
        }
    }
}

#[test]
fn repeated_improvement_keeps_objects_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for c in ORACLE_CONSTRUCTIONS {
        for _ in 0..10 {
            let mut p: Presentation = sample::oracle_input(&mut rng, c);
            for _ in 0..5 {
                let w = improve(&p, SAMPLE_BOUND).unwrap().witness;
                p = apply_witness(&p, &w, SAMPLE_BOUND).unwrap();
            }
            assert!(check(&p, SAMPLE_BOUND).is_ok());
        }
    }
}

#[test]
fn matching_oracles_maximize_and_the_rest_minimize() {
    for c in ORACLE_CONSTRUCTIONS {
        let want = match c {
            Construction::H1Star | Construction::H1 | Construction::Tardos => Direction::Maximize,
            _ => Direction::Minimize,
        };
        assert_eq!(Kind::of(c).direction(), want);
    }
}
