use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strongmax::objects::{AnyWitness, Presentation};
use strongmax::oracles::{improve, ORACLE_CONSTRUCTIONS};
use strongmax::sample::{self, SAMPLE_BOUND};
use strongmax::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn presentations_and_witnesses_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in ORACLE_CONSTRUCTIONS {
            let p = sample::oracle_input(&mut rng, c);
            let text = p.to_json_string().unwrap();
            prop_assert_eq!(&Presentation::from_json_str(&text).unwrap(), &p);
            let w = improve(&p, SAMPLE_BOUND).unwrap().witness;
            let back: AnyWitness = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
            prop_assert_eq!(back, w);
        }
    }
}

#[test]
fn malformed_documents_are_rejected() {
    for text in [
        "{}",
        r#"{"variant":"explicit","construction":"h1star","edges":[[0]]}"#,
        r#"{"variant":"explicit","construction":"nowhere","edges":[]}"#,
        r#"{"variant":"cofinite","construction":"vertexcover","complement":[0]}"#,
        "not json",
    ] {
        assert!(Presentation::from_json_str(text).is_err(), "{text}");
    }
    assert!(matches!(
        Presentation::from_json_str(r#"{"variant":"explicit","construction":"h1star","edges":[[2,3,4]]}"#),
        Err(Error::NotAnEdge { .. }) | Err(Error::Malformed(_)) | Err(Error::Json(_))
    ));
}
