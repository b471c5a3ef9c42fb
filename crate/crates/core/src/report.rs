//! Structured reports emitted by the CLI: deterministic JSON given
//! (input, seed, version), with every rational rendered as a `p/q` string in
//! lowest terms.

use serde::Serialize;

use crate::algebra::MulTable;
use crate::cohomology::{self, CohomologySummary, TheoryKind};
use crate::counting::CountResult;
use crate::equivariance::LawResult;
use crate::forms;
use crate::identities::{self, ModPMembership, ResidualReport};
use crate::matrix::Matrix;
use crate::moduli::{self, RigidityVerdict, StratumInvariant, Theory};
use crate::Result;

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl ToolInfo {
    pub fn current() -> Self {
        ToolInfo {
            name: "algvar",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDesc {
    pub name: String,
    pub dim: usize,
    /// `builder:<name>` or `file:<path>`.
    pub source: String,
    /// Scalar mode requested on the command line; verdict-level values are
    /// always rational.
    pub field: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipSection {
    pub associative: bool,
    pub symmetric: bool,
    pub commutative: bool,
    pub leibniz: bool,
    pub skew: bool,
    pub lie: bool,
    pub residuals: Vec<ResidualReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormSection {
    pub gram: Vec<Vec<String>>,
    pub discriminant: String,
    pub on_variety: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormsSection {
    pub trace: FormSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separable: Option<bool>,
    pub killing: FormSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semisimple_lie_point: Option<bool>,
    pub sigma_l: Vec<String>,
    pub sigma_r: Vec<String>,
    pub leibniz_kernel_dim: usize,
    pub right_annihilator_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator_identities_ok: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologySection {
    pub theory: &'static str,
    pub summary: CohomologySummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct RigiditySection {
    pub verdict: RigidityVerdict,
    pub stratum: StratumInvariant,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivarianceSection {
    pub dims: Vec<usize>,
    pub trials: usize,
    pub laws: Vec<LawResult>,
    pub all_passed: bool,
}

/// The top-level report; sections are filled per subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub input: InputDesc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub membership: Option<MembershipSection>,
    /// Advisory flags from the fixed-prime pre-screen; present only with
    /// `--field prime`. A `false` here is definitive, a `true` is not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub membership_mod_p: Option<ModPMembership>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forms: Option<FormsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rigidity: Option<RigiditySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<CountResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivariance: Option<EquivarianceSection>,
}

impl Report {
    pub fn new(input: InputDesc) -> Self {
        Report {
            tool: ToolInfo::current(),
            input,
            seed: None,
            membership: None,
            membership_mod_p: None,
            cohomology: None,
            forms: None,
            rigidity: None,
            count: None,
            equivariance: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn gram_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(|v| v.to_string()).collect())
        .collect()
}

/// Membership section from the five residual reports.
pub fn membership_section(x: &MulTable) -> MembershipSection {
    let residuals = identities::check_all(x);
    MembershipSection {
        associative: identities::is_associative(x),
        symmetric: identities::is_symmetric(x),
        commutative: identities::is_commutative(x),
        leibniz: identities::is_leibniz(x),
        skew: identities::is_skew(x),
        lie: identities::is_lie(x),
        residuals,
    }
}

pub fn forms_section(x: &MulTable) -> Result<FormsSection> {
    let trace = forms::trace_gram(x);
    let killing = forms::killing_gram(x)?;
    let chars = forms::modular_characters(x);
    let separable = trace.on_variety.then(|| trace.is_nondegenerate());
    let semisimple = killing.on_variety.then(|| killing.is_nondegenerate());
    let operator_identities_ok = identities::is_leibniz(x)
        .then(|| forms::operator_identities_check(x).is_ok());
    Ok(FormsSection {
        trace: FormSection {
            gram: gram_strings(&trace.gram),
            discriminant: trace.discriminant.to_string(),
            on_variety: trace.on_variety,
        },
        separable,
        killing: FormSection {
            gram: gram_strings(&killing.gram),
            discriminant: killing.discriminant.to_string(),
            on_variety: killing.on_variety,
        },
        semisimple_lie_point: semisimple,
        sigma_l: chars.sigma_l.iter().map(|v| v.to_string()).collect(),
        sigma_r: chars.sigma_r.iter().map(|v| v.to_string()).collect(),
        leibniz_kernel_dim: forms::leibniz_kernel(x).len(),
        right_annihilator_dim: forms::right_annihilator(x).len(),
        operator_identities_ok,
    })
}

pub fn cohomology_section(x: &MulTable, theory: TheoryKind) -> Result<CohomologySection> {
    Ok(CohomologySection {
        theory: theory.name(),
        summary: cohomology::summary(x, theory)?,
    })
}

pub fn rigidity_section(x: &MulTable, theory: Theory) -> Result<RigiditySection> {
    Ok(RigiditySection {
        verdict: moduli::rigidity_verdict(x, theory)?,
        stratum: moduli::stratum_invariant(x, theory)?,
    })
}
