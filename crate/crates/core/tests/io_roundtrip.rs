mod common;

use bierkit::io::{input_digest, parse_facets, write_facets};
use bierkit::{FaceSet, SimplicialComplex};
use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn serialized_complexes_parse_back(n in 1usize..=20, raw in prop::collection::vec(any::<u32>(), 0..30)) {
        let faces = raw.into_iter().map(|x| FaceSet::from_index(x as usize & ((1 << n) - 1)));
        let k = SimplicialComplex::from_faces(n, faces).unwrap();
        let text = write_facets(&k);
        prop_assert_eq!(parse_facets(&text).unwrap(), k.clone());
        prop_assert_eq!(write_facets(&parse_facets(&text).unwrap()), text);
    }

    #[test]
    fn digest_is_insensitive_to_facet_order(seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut r = rng(seed);
        let k = random_proper_complex(&mut r, 8);
        let mut lines: Vec<String> = k.facets().iter().map(|f| {
            let mut vs: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
            vs.reverse();
            vs.join("  ")
        }).collect();
        lines.shuffle(&mut r);
        let text = format!("vertices: 8\n# shuffled\n{}\n", lines.join("\n"));
        let parsed = parse_facets(&text).unwrap();
        prop_assert_eq!(&parsed, &k);
        prop_assert_eq!(input_digest(&parsed), input_digest(&k));
    }
}

#[test]
fn fixtures_round_trip() {
    for (name, k) in fixtures() {
        assert_eq!(parse_facets(&write_facets(&k)).unwrap(), k, "{name}");
    }
    let text = write_facets(&rp2_6());
    assert!(text.starts_with("vertices: 6\n"));
    assert_eq!(text.lines().count(), 11);
    assert_eq!(parse_facets(&text).unwrap().f_vector().unwrap().0, vec![6, 15, 10]);
}

#[test]
fn path_from_comment_example() {
    let k = parse_facets("1 2\n# comment\n\n2 3\n").unwrap();
    assert_eq!(k, SimplicialComplex::from_facets(3, [vec![1, 2], vec![2, 3]]).unwrap());
}
