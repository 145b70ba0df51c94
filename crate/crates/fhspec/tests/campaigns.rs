//! Library-level campaign tests (no process spawning).

use fhspec::campaigns;
use fhspec::config::{self, ConfigDoc, RegularDoc, SingularityDoc, SymbolDoc};
use fhspec::CampaignKind;

/// Symbols with one companion singularity each at θ = π: the reference
/// amplitude picks up the chord factors 2^{-2·0.1} and 2^{-2·0.05}, and
/// the normalized gap still shrinks with N.
#[test]
fn convergence_with_companion_singularities_trends_down() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("companion.csv");
    let doc = ConfigDoc {
        campaign: CampaignKind::Convergence,
        symbol1: Some(SymbolDoc {
            singularities: vec![
                SingularityDoc { theta: 0.0, alpha: 0.3 },
                SingularityDoc { theta: std::f64::consts::PI, alpha: 0.1 },
            ],
            regular: RegularDoc { coeffs: vec![(0, 1.0, 0.0)] },
        }),
        symbol2: Some(SymbolDoc {
            singularities: vec![
                SingularityDoc { theta: 0.0, alpha: 0.2 },
                SingularityDoc { theta: std::f64::consts::PI, alpha: 0.05 },
            ],
            regular: RegularDoc { coeffs: vec![(0, 1.0, 0.0)] },
        }),
        n_list: vec![32, 64, 128, 256],
        grid_m: 256,
        quad_tol: 1e-10,
        power_tol: 1e-11,
        max_iter: 50_000,
        seed: 2024,
        rotation_theta: None,
        output_path: out.display().to_string(),
    };
    let cfg = config::validate(&doc).unwrap();
    let (outcome, records) = campaigns::run_convergence(&cfg).unwrap();
    assert!(outcome.violations.is_empty(), "{:?}", outcome.violations);
    assert_eq!(records.len(), 4);

    // spectral radius never exceeds the norm
    for r in &records {
        assert!(r.eig_norm_gap >= -1e-12, "N={}: {}", r.n, r.eig_norm_gap);
        assert!(r.sigma_max >= r.lambda_max * (1.0 - 1e-12));
    }
    // gap to the companion-corrected reference shrinks along the sweep
    let gaps: Vec<f64> = records.iter().map(|r| r.rel_gap_lambda).collect();
    assert!(
        gaps.windows(2).all(|w| w[1] < w[0]),
        "gaps not decreasing: {gaps:?}"
    );
    // distinct exponents make the product non-normal: the σ/λ gap is
    // strictly positive at finite N
    assert!(records.iter().all(|r| r.eig_norm_gap > 0.0));
}

/// The sweep normalizes by the dominant-exponent total even when the
/// symbols carry different exponents, and the reference uses the shared
/// dominant location's regular-part values.
#[test]
fn convergence_reference_uses_regular_part_value() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("regular.csv");
    // c₂(1) = 2.5 at the dominant location θ = 0
    let doc = ConfigDoc {
        campaign: CampaignKind::Convergence,
        symbol1: Some(SymbolDoc {
            singularities: vec![SingularityDoc { theta: 0.0, alpha: 0.25 }],
            regular: RegularDoc { coeffs: vec![(0, 1.0, 0.0)] },
        }),
        symbol2: Some(SymbolDoc {
            singularities: vec![SingularityDoc { theta: 0.0, alpha: 0.25 }],
            regular: RegularDoc { coeffs: vec![(0, 2.0, 0.0), (1, 0.25, 0.0)] },
        }),
        n_list: vec![64, 128],
        grid_m: 128,
        quad_tol: 1e-10,
        power_tol: 1e-11,
        max_iter: 50_000,
        seed: 30,
        rotation_theta: None,
        output_path: out.display().to_string(),
    };
    let cfg = config::validate(&doc).unwrap();
    let (_, records) = campaigns::run_convergence(&cfg).unwrap();
    // same reference with the flat symbol, scaled by c₂(1) = 2.5
    let flat = ConfigDoc {
        symbol2: Some(SymbolDoc {
            singularities: vec![SingularityDoc { theta: 0.0, alpha: 0.25 }],
            regular: RegularDoc { coeffs: vec![(0, 1.0, 0.0)] },
        }),
        output_path: dir.path().join("flat.csv").display().to_string(),
        ..doc
    };
    let cfg = config::validate(&flat).unwrap();
    let (_, flat_records) = campaigns::run_convergence(&cfg).unwrap();
    let ratio = records[0].reference / flat_records[0].reference;
    assert!((ratio - 2.5).abs() < 1e-12, "reference ratio {ratio}");
}
