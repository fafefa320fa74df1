//! Property tests over the spec invariants.

use proptest::prelude::*;

use rstar_index::lz77;
use rstar_index::oracle;
use rstar_index::rlbwt::SaInterval;
use rstar_index::sparse::SparseBits;
use rstar_index::suffix::{build_suffix_array, bwt_from_sa};
use rstar_index::{io, BuildOptions, Pattern, RStarIndex, Text};

fn content(max_len: usize, sigma: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec((0..sigma).prop_map(|c| b'a' + c), 1..=max_len)
}

proptest! {
    #[test]
    fn bwt_permutes_the_text(c in content(200, 4)) {
        let t = Text::from_content(&c).unwrap();
        let mut bwt = bwt_from_sa(&t, &build_suffix_array(&t));
        let mut bytes = t.bytes().to_vec();
        bwt.sort_unstable();
        bytes.sort_unstable();
        prop_assert_eq!(bwt, bytes);
    }

    #[test]
    fn reverse_is_an_involution(c in content(200, 26)) {
        let t = Text::from_content(&c).unwrap();
        prop_assert_eq!(t.reversed().reversed(), t);
    }

    #[test]
    fn parse_round_trips_and_matches_oracle(c in content(150, 3)) {
        let t = Text::from_content(&c).unwrap();
        let parsed = lz77::parse(&t);
        prop_assert_eq!(parsed.decode().unwrap(), t.clone());
        prop_assert_eq!(&parsed, &oracle::naive_parse(&t));
        for p in parsed.phrases() {
            if p.copy_len > 0 {
                prop_assert!(p.source_start < p.start);
            }
        }
    }

    #[test]
    fn backward_search_length_is_occurrence_count(
        c in content(200, 3),
        p in content(6, 3),
    ) {
        let t = Text::from_content(&c).unwrap();
        let bwt = bwt_from_sa(&t, &build_suffix_array(&t));
        let rl = rstar_index::rlbwt::RunLengthBwt::build(&bwt).unwrap();
        let occ = oracle::naive_locate(&c, &p).len();
        prop_assert_eq!(rl.backward_search(&p).len(), occ);
    }

    #[test]
    fn sparse_bits_identities(
        mut positions in prop::collection::btree_set(1usize..=500, 0..40),
    ) {
        let marks: Vec<usize> = positions.iter().copied().collect();
        positions.insert(500); // keep the universe fixed
        let b = SparseBits::build(marks.clone(), 500).unwrap();
        for k in 1..=b.count() {
            prop_assert_eq!(b.rank1(b.select1(k).unwrap()), k);
        }
        for i in (0..=500).step_by(7) {
            let naive = marks.iter().filter(|&&p| p <= i).count();
            prop_assert_eq!(b.rank1(i), naive);
        }
        let iv = SaInterval::new(40, 360);
        let projected = b.project_interval(iv);
        let inside = marks.iter().filter(|&&p| iv.lo <= p && p <= iv.hi).count();
        prop_assert_eq!(projected.len(), inside);
    }

    #[test]
    fn locate_agrees_with_naive_scan(
        c in content(120, 2),
        p in content(5, 2),
    ) {
        let idx = RStarIndex::build(&c, BuildOptions::default()).unwrap();
        let pattern = Pattern::new(&p).unwrap();
        let expected = oracle::naive_locate(&c, &p);
        prop_assert_eq!(idx.locate(&pattern), expected.clone());
        prop_assert_eq!(idx.count(&pattern), expected.len());
        prop_assert_eq!(idx.leftmost(&pattern), expected.first().copied());
        prop_assert_eq!(idx.rightmost(&pattern).unwrap(), expected.last().copied());
    }

    #[test]
    fn closure_spawns_each_occurrence_once(
        c in content(120, 2),
        p in content(4, 2),
    ) {
        let idx = RStarIndex::build(&c, BuildOptions::default()).unwrap();
        let pattern = Pattern::new(&p).unwrap();
        let primaries = idx.primary_occurrences(&pattern);
        let closure = idx.secondary_closure(&primaries, pattern.len());
        prop_assert_eq!(primaries.len() + closure.spawned, closure.occurrences.len());
    }

    #[test]
    fn serialized_index_is_query_equivalent(
        c in content(100, 3),
        p in content(4, 3),
    ) {
        let idx = RStarIndex::build(&c, BuildOptions::default()).unwrap();
        let mut buf = Vec::new();
        io::write_index(&idx, &mut buf).unwrap();
        let loaded = io::read_index(&buf).unwrap();
        let pattern = Pattern::new(&p).unwrap();
        prop_assert_eq!(idx.locate(&pattern), loaded.locate(&pattern));
        prop_assert_eq!(idx.stats(), loaded.stats());
    }

    #[test]
    fn primary_secondary_dichotomy(
        c in content(80, 2),
        p in content(4, 2),
    ) {
        // every true occurrence either touches a boundary (primary) or lies
        // strictly inside some phrase's copy part
        let t = Text::from_content(&c).unwrap();
        let parsed = lz77::parse(&t);
        let boundaries = parsed.boundaries();
        let m = p.len();
        for s in oracle::naive_locate(&c, &p) {
            let e = s + m - 1;
            let touches = boundaries.iter().any(|&b| s <= b && b <= e);
            let inside_copy = parsed.phrases().iter().any(|ph| {
                ph.copy_len > 0 && ph.start <= s && e < ph.start + ph.copy_len
            });
            prop_assert!(touches || inside_copy, "occurrence at {} violates dichotomy", s);
        }
    }
}
