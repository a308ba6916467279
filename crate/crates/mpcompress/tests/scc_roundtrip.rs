mod common;

use common::{corpus_complex, spelled_scc};
use mpcompress::{parse_scc, render_scc};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parse_then_write_is_stable(seed in any::<u64>(), spelling in any::<u64>()) {
        let c = corpus_complex(seed);
        let text = spelled_scc(&c, spelling);
        let parsed = parse_scc(&text).unwrap();
        prop_assert_eq!(parsed.matrices(), c.matrices());
        let canonical = render_scc(&parsed);
        let again = parse_scc(&canonical).unwrap();
        prop_assert_eq!(&again, &parsed);
        prop_assert_eq!(render_scc(&again), canonical);
    }

    #[test]
    fn canonical_text_of_rank_grades_is_a_fixed_point(seed in any::<u64>()) {
        let c = corpus_complex(seed);
        let text = render_scc(&c);
        prop_assert_eq!(render_scc(&parse_scc(&text).unwrap()), text);
    }
}

#[test]
fn tokens_keep_their_first_spelling() {
    let text = "scc2020\n2\n1 2\n1.0 2e0 ; 0 1\n1 0.5 ;\n1.00 2 ;\n";
    let out = render_scc(&parse_scc(text).unwrap());
    assert_eq!(out, "scc2020\n2\n1 2\n1.0 2e0 ; 0 1\n1.0 0.5 ;\n1.0 2e0 ;\n");
}
