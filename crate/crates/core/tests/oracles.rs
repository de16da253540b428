use num_bigint::BigInt;

use jarr_core::central::gamma_coefficients;
use jarr_core::oracle::{central_census, finite_field_count, whitney_chi, OracleConfig};
use jarr_core::verify::{interpolate, verify, OracleKind};
use jarr_core::{chi, Mode};

#[test]
fn pipeline_matches_subset_sums_up_to_five() {
    let cfg = OracleConfig::default();
    for n in 1..=5 {
        assert_eq!(
            chi(n, Mode::Corrected).unwrap(),
            whitney_chi(n, &cfg).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn central_counts_match_census() {
    // Γ folded down to (rank, size) counts for one n should be the census
    // of central subarrangements by rank and cardinality
    let cfg = OracleConfig::default();
    for n in 1..=4 {
        let ours = gamma_coefficients(n, Mode::Corrected)
            .unwrap()
            .central_counts(n);
        assert_eq!(ours, central_census(n, &cfg).unwrap(), "n={n}");
    }
}

#[test]
fn point_counts_interpolate_to_chi() {
    let cfg = OracleConfig::default();
    let n = 4;
    let samples: Vec<(BigInt, BigInt)> = [5u64, 7, 11, 13, 17]
        .iter()
        .map(|&q| (BigInt::from(q), finite_field_count(n, q, &cfg).unwrap()))
        .collect();
    assert_eq!(
        interpolate(&samples),
        Some(chi(n, Mode::Corrected).unwrap())
    );
}

#[test]
fn verify_six_graphs_only() {
    let report = verify(6, &[OracleKind::Graphs], None, &OracleConfig::default()).unwrap();
    assert!(report.corrected_passed());
}
