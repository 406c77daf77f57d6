//! Closed forms against brute force, exhaustively on small degrees.

use symcube::{
    c2, character_of_decomposition, character_symmetric_power, decompose_symmetric_power,
    dim_by_convolution, dim_closed_form, dim_weight, greedy_decompose, multiplicity_sym,
    symmetric_power_dimension, IrrepLabel, Oracle, SortedIndex, Weight,
};

#[test]
fn c2_matches_bruteforce() {
    let o = Oracle::default();
    for r1 in 0..=40 {
        for r2 in 0..=r1 {
            for r3 in 0..=r1 {
                assert_eq!(
                    c2(r1, r2, r3),
                    o.c2_bruteforce(r1, r2, r3).unwrap(),
                    "({r1},{r2},{r3})"
                );
            }
        }
    }
}

#[test]
fn three_routes_agree_on_normalized_indices() {
    let o = Oracle::default();
    for m in 0..=16 {
        for idx in SortedIndex::all(m) {
            let (k, r, n) = (idx.k(), idx.r(), idx.n());
            let brute = o.convolution_bruteforce(m, k, r, n).unwrap();
            assert_eq!(dim_by_convolution(m, k, r, n).unwrap(), brute, "{idx}");
            assert_eq!(dim_closed_form(idx).unwrap(), brute, "{idx}");
        }
    }
}

#[test]
fn closed_form_matches_monomial_count() {
    let o = Oracle::default();
    for m in 0..=20 {
        let enumerated = o.enumerate_character(m).unwrap();
        let mi = m as i64;
        for idx in SortedIndex::all(m) {
            let w = Weight::new(
                mi - 2 * idx.k() as i64,
                mi - 2 * idx.r() as i64,
                mi - 2 * idx.n() as i64,
            );
            assert_eq!(dim_closed_form(idx).unwrap(), enumerated.get(w), "{idx}");
        }
    }
}

#[test]
fn symmetric_power_character_matches_enumeration() {
    let o = Oracle::default();
    for m in 0..=12 {
        assert_eq!(
            character_symmetric_power(m).unwrap(),
            o.enumerate_character(m).unwrap(),
            "m={m}"
        );
    }
}

#[test]
fn weight_dimensions_sum_to_total() {
    for m in 0..=50 {
        let c = character_symmetric_power(m).unwrap();
        assert_eq!(
            c.total().unwrap(),
            symmetric_power_dimension(m).unwrap(),
            "m={m}"
        );
    }
}

#[test]
fn decomposition_checksum() {
    for m in 0..=50 {
        let d = decompose_symmetric_power(m).unwrap();
        assert_eq!(
            d.total_dim().unwrap(),
            symmetric_power_dimension(m).unwrap(),
            "m={m}"
        );
    }
}

#[test]
fn decomposition_reconstructs_character_and_matches_greedy() {
    for m in 0..=10 {
        let d = decompose_symmetric_power(m).unwrap();
        let c = character_symmetric_power(m).unwrap();
        assert_eq!(character_of_decomposition(&d).unwrap(), c, "m={m}");
        assert_eq!(greedy_decompose(&c).unwrap(), d, "m={m}");
    }
}

#[test]
fn multiplicities_are_permutation_equivariant() {
    for m in 0..=20 {
        for n1 in 0..=m {
            for n2 in 0..=m {
                for n3 in 0..=m {
                    let x = multiplicity_sym(m, IrrepLabel::new(n1, n2, n3)).unwrap();
                    for [a, b, c] in [
                        [n1, n3, n2],
                        [n2, n1, n3],
                        [n2, n3, n1],
                        [n3, n1, n2],
                        [n3, n2, n1],
                    ] {
                        assert_eq!(multiplicity_sym(m, IrrepLabel::new(a, b, c)).unwrap(), x);
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_module_appears_once_every_fourth_degree() {
    for m in 0..=40 {
        let want = i128::from(m % 4 == 0);
        assert_eq!(
            multiplicity_sym(m, IrrepLabel::new(0, 0, 0)).unwrap(),
            want,
            "m={m}"
        );
    }
}

#[test]
fn out_of_lattice_weights_have_zero_dimension() {
    for m in 0..=12u32 {
        let mi = m as i64;
        for l in [mi + 1, mi + 2, -mi - 2, mi - 1] {
            assert_eq!(
                dim_weight(m, Weight::new(l, mi, mi)).unwrap(),
                0,
                "m={m} l={l}"
            );
            assert_eq!(
                dim_weight(m, Weight::new(mi, mi, l)).unwrap(),
                0,
                "m={m} l={l}"
            );
        }
    }
}
