//! Summing realization counts over every candidate sequence of order `p`
//! must give the number of polyhedra with `p` vertices.

use std::time::Instant;

use polyuni_core::enumerate::apex::enumerate_apex;
use polyuni_core::enumerate::generic::enumerate_generic;
use polyuni_core::sequence::candidate_sequences;

// Polyhedral graphs by number of vertices, p = 4..=9.
const POLYHEDRA: [usize; 6] = [1, 2, 7, 34, 257, 2606];

#[test]
fn generic_totals_match_polyhedra_counts() {
    for (i, &want) in POLYHEDRA.iter().enumerate().take(6) {
        let p = i + 4;
        let t = Instant::now();
        let total: usize = candidate_sequences(p).iter().map(|s| enumerate_generic(s, None).len()).sum();
        eprintln!("p={p}: {total} polyhedra in {:?}", t.elapsed());
        assert_eq!(total, want, "p={p}");
    }
}

#[test]
fn generic_and_apex_agree_up_to_nine() {
    for p in 5..=9usize {
        let t = Instant::now();
        let mut checked = 0;
        for s in candidate_sequences(p).iter().filter(|s| s.degrees()[0] as usize == p - 2) {
            let mut g: Vec<String> =
                enumerate_generic(s, None).iter().map(|g| polyuni_core::canonical_form(g).to_string()).collect();
            let mut a: Vec<String> =
                enumerate_apex(s, None).unwrap().iter().map(|g| polyuni_core::canonical_form(g).to_string()).collect();
            g.sort();
            a.sort();
            assert_eq!(g, a, "{s}");
            checked += 1;
        }
        eprintln!("p={p}: {checked} sequences agree in {:?}", t.elapsed());
    }
}

// Triangulations of the sphere by number of vertices, p = 4..=11.
const TRIANGULATIONS: [usize; 8] = [1, 1, 2, 5, 14, 50, 233, 1249];

fn triangulations(p: usize) -> usize {
    candidate_sequences(p)
        .iter()
        .filter(|s| s.sum() as usize == 6 * p - 12)
        .map(|s| enumerate_generic(s, None).len())
        .sum()
}

#[test]
fn triangulation_totals() {
    for (i, &want) in TRIANGULATIONS.iter().enumerate().take(7) {
        let p = i + 4;
        let t = Instant::now();
        let total = triangulations(p);
        eprintln!("p={p}: {total} triangulations in {:?}", t.elapsed());
        assert_eq!(total, want, "p={p}");
    }
}

/// About five minutes.
#[test]
#[ignore]
fn triangulations_at_eleven() {
    assert_eq!(triangulations(11), TRIANGULATIONS[7]);
}
