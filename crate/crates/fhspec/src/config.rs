//! Experiment configuration: the JSON document format, schema validation,
//! and conversion into `fh-core` domain objects.

use fh_core::symbol::{RegularPart, Singularity, SymbolSpec};
use fh_core::Complex64;
use serde::{Deserialize, Serialize};

/// Which verification campaign to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CampaignKind {
    Convergence,
    Bounds,
    Fourier,
    Widom,
    KernelTable,
}

impl CampaignKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CampaignKind::Convergence => "convergence",
            CampaignKind::Bounds => "bounds",
            CampaignKind::Fourier => "fourier",
            CampaignKind::Widom => "widom",
            CampaignKind::KernelTable => "kernel-table",
        }
    }
}

/// One singularity in the JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SingularityDoc {
    pub theta: f64,
    pub alpha: f64,
}

/// Regular part: sparse coefficients as [n, re, im] triples.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegularDoc {
    pub coeffs: Vec<(i64, f64, f64)>,
}

/// A symbol in the JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolDoc {
    pub singularities: Vec<SingularityDoc>,
    pub regular: RegularDoc,
}

impl SymbolDoc {
    pub fn build(&self) -> Result<SymbolSpec, String> {
        let singularities = self
            .singularities
            .iter()
            .map(|s| Singularity::new(s.theta, s.alpha).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let regular =
            RegularPart::from_coefficients(self.coeffs_complex()).map_err(|e| e.to_string())?;
        SymbolSpec::new(singularities, regular).map_err(|e| e.to_string())
    }

    fn coeffs_complex(&self) -> Vec<(i64, Complex64)> {
        self.regular
            .coeffs
            .iter()
            .map(|&(n, re, im)| (n, Complex64::new(re, im)))
            .collect()
    }
}

/// The raw configuration document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub campaign: CampaignKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol1: Option<SymbolDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol2: Option<SymbolDoc>,
    #[serde(rename = "N_list")]
    pub n_list: Vec<u64>,
    pub grid_m: usize,
    pub quad_tol: f64,
    pub power_tol: f64,
    pub max_iter: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation_theta: Option<f64>,
    pub output_path: String,
}

impl ConfigDoc {
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("malformed config JSON: {e}"))
    }
}

/// A configuration whose schema and cross-field constraints have been
/// checked and whose symbols have been constructed.
#[derive(Debug, Clone)]
pub struct ValidatedConfig {
    pub doc: ConfigDoc,
    pub symbol1: Option<SymbolSpec>,
    pub symbol2: Option<SymbolSpec>,
}

/// Schema-level validation; everything the `validate` subcommand can
/// decide without running numerics.
pub fn validate(doc: &ConfigDoc) -> Result<ValidatedConfig, String> {
    if doc.n_list.is_empty() {
        return Err("N_list must be non-empty".into());
    }
    if !doc.n_list.windows(2).all(|w| w[0] < w[1]) {
        return Err("N_list must be strictly increasing".into());
    }
    for (name, v) in [("quad_tol", doc.quad_tol), ("power_tol", doc.power_tol)] {
        if v.is_nan() || v <= 0.0 {
            return Err(format!("{name} must be positive, got {v}"));
        }
    }
    if doc.max_iter == 0 {
        return Err("max_iter must be at least 1".into());
    }
    if doc.grid_m < 2 {
        return Err(format!("grid_m must be at least 2, got {}", doc.grid_m));
    }
    if doc.output_path.is_empty() {
        return Err("output_path must be set".into());
    }

    let symbol1 = doc.symbol1.as_ref().map(|s| s.build()).transpose()?;
    let symbol2 = doc.symbol2.as_ref().map(|s| s.build()).transpose()?;

    let need_positive_dominant = |s: &SymbolSpec, which: &str| -> Result<(), String> {
        let dom = s.dominant().map_err(|e| format!("{which}: {e}"))?;
        if !dom.exponent.is_positive() {
            return Err(format!(
                "{which}: dominant exponent must lie in (0, 1/2) for this campaign"
            ));
        }
        Ok(())
    };

    match doc.campaign {
        CampaignKind::Convergence => {
            let s1 = symbol1.as_ref().ok_or("convergence campaign requires symbol1")?;
            let s2 = symbol2.as_ref().ok_or("convergence campaign requires symbol2")?;
            for (s, which) in [(s1, "symbol1"), (s2, "symbol2")] {
                if s.singularities().is_empty() {
                    return Err(format!(
                        "{which}: convergence campaign requires at least one singularity"
                    ));
                }
                for sing in s.singularities() {
                    if !sing.exponent.is_positive() {
                        return Err(format!(
                            "{which}: convergence campaign requires all exponents in (0, 1/2)"
                        ));
                    }
                }
                need_positive_dominant(s, which)?;
            }
            let d1 = s1.dominant().unwrap().location.theta();
            let d2 = s2.dominant().unwrap().location.theta();
            if d1 != d2 {
                return Err(format!(
                    "dominant singularities must share a location (got θ = {d1} and {d2})"
                ));
            }
        }
        CampaignKind::Fourier => {
            let s1 = symbol1.as_ref().ok_or("fourier campaign requires symbol1")?;
            s1.dominant().map_err(|e| format!("symbol1: {e}"))?;
        }
        CampaignKind::Bounds | CampaignKind::KernelTable => {
            let s1 = symbol1.as_ref().ok_or("this campaign requires symbol1")?;
            let s2 = symbol2.as_ref().ok_or("this campaign requires symbol2")?;
            need_positive_dominant(s1, "symbol1")?;
            need_positive_dominant(s2, "symbol2")?;
        }
        CampaignKind::Widom => {}
    }

    Ok(ValidatedConfig { doc: doc.clone(), symbol1, symbol2 })
}
