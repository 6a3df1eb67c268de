use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::certificate::ReznickCertificate;
use crate::parser::format_polynomial;
use crate::poly::{Coefficient, Polynomial};
use crate::rational;

/// Which statement a report checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Statement {
    #[serde(rename = "chu")]
    Chu,
    #[serde(rename = "identity_C")]
    IdentityC,
    #[serde(rename = "identity_B")]
    IdentityB,
    #[serde(rename = "inequality_A")]
    InequalityA,
}

impl Statement {
    pub fn is_inequality(self) -> bool {
        matches!(self, Statement::InequalityA)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Statement::Chu => "chu",
            Statement::IdentityC => "identity_C",
            Statement::IdentityB => "identity_B",
            Statement::InequalityA => "inequality_A",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChuParams {
    pub r: u32,
    pub s: u32,
    pub p: u32,
}

/// The inputs a report was computed from, plus fuzz provenance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    /// Named inputs (`P`, `Q`, …) in the text grammar.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub polynomials: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chu: Option<ChuParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
}

impl Instance {
    pub(crate) fn of_polynomials(named: &[(&str, &Polynomial)]) -> Instance {
        Instance {
            dimension: named.first().map(|(_, p)| p.dimension()),
            polynomials: named
                .iter()
                .map(|(n, p)| (n.to_string(), format_polynomial(p)))
                .collect(),
            ..Default::default()
        }
    }
}

/// Outcome of one identity or inequality check.
///
/// For identities `verdict` is `difference == 0`; for the inequality it is
/// `difference ≥ 0` with `difference = ‖PQ‖² − ‖P‖²‖Q‖²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub statement: Statement,
    #[serde(with = "rational")]
    pub lhs: Coefficient,
    #[serde(with = "rational")]
    pub rhs: Coefficient,
    #[serde(with = "rational")]
    pub difference: Coefficient,
    pub verdict: bool,
    pub instance: Instance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ReznickCertificate>,
}

impl VerificationReport {
    pub fn new(
        statement: Statement,
        lhs: Coefficient,
        rhs: Coefficient,
        instance: Instance,
    ) -> Self {
        let difference = &lhs - &rhs;
        let verdict = if statement.is_inequality() {
            !difference.is_negative()
        } else {
            difference.is_zero()
        };
        VerificationReport {
            statement,
            lhs,
            rhs,
            difference,
            verdict,
            instance,
            certificate: None,
        }
    }

    /// The verdict, and for a certified inequality also that the certificate
    /// balances and its excess block accounts for the whole difference.
    pub fn passes(&self) -> bool {
        self.verdict
            && self
                .certificate
                .as_ref()
                .is_none_or(|c| c.is_balanced() && c.excess_sum == self.difference)
    }
}
