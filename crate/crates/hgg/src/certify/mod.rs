//! Certificate data model, the end-to-end verification pipeline, and the
//! built-in certified cases.
//!
//! A [`Certificate`] names a hypergeometric pair, an optional explicit
//! hyperbolic basis, a commutator convention, and a word program over the
//! conjugated generators `a`, `b`, `c` (plus the derived atom `q1 = b a⁻¹`)
//! returning two expressions. Verification runs the whole pipeline —
//! parameters to polynomials to companion matrices, closure classification,
//! invariant form by both methods, hyperbolic basis, conjugation, word
//! evaluation — and checks that the two values land in the highest and
//! second-highest root groups. Together with Zariski density (inherited from
//! the symplectic closure classification, not re-proven here) that certifies
//! finite index.

mod fixtures;
mod format;

pub use fixtures::{builtin_fixture, builtin_fixtures};
pub use format::{certificate_from_str, certificate_to_string, load_certificate, save_certificate};

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;

use crate::cyclotomic::{
    self, params_to_poly, zariski_closure_class, ClosureClass, IntPolynomial, ParameterVector,
};
use crate::exactmat::{companion, CommutatorConvention, RationalMatrix, WordProgram};
use crate::hyperbolic::{conjugate_generators, hyperbolic_basis, hyperbolic_basis_seeded,
    verify_antidiagonal};
use crate::invariant_form::{
    form_via_linear_solve, form_via_orbit, forms_agree, v_vector, SymplecticForm,
};
use crate::rootgroups::{in_highest_root_group, in_second_highest_root_group};
use crate::{Error, Result};

/// A named word-certificate for one hypergeometric pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub label: String,
    pub alpha: ParameterVector,
    pub beta: ParameterVector,
    /// Explicit hyperbolic basis; when absent the pipeline constructs one.
    pub basis: Option<RationalMatrix>,
    pub convention: CommutatorConvention,
    /// Program over `a`, `b`, `c`, `q1` returning the two candidate
    /// unipotents.
    pub program: WordProgram,
    pub expected_q1: Option<RationalMatrix>,
    pub expected_q2: Option<RationalMatrix>,
}

/// Pipeline stage identifiers used in failure reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    PairValidity,
    Classification,
    FormComputation,
    BasisConstruction,
    Conjugation,
    WordEvaluation,
    HighestRootMembership,
    SecondHighestRootMembership,
    FormPreservation,
    ExpectedMatrices,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::PairValidity => "pair validity",
            Stage::Classification => "classification",
            Stage::FormComputation => "form computation",
            Stage::BasisConstruction => "basis construction",
            Stage::Conjugation => "conjugation",
            Stage::WordEvaluation => "word evaluation",
            Stage::HighestRootMembership => "q1 membership",
            Stage::SecondHighestRootMembership => "q2 membership",
            Stage::FormPreservation => "form preservation",
            Stage::ExpectedMatrices => "expected matrices",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conclusion {
    ArithmeticCertified,
    Failed(Stage),
}

/// Per-stage outcome of verifying one certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub label: String,
    pub pair_valid: bool,
    pub class_symplectic: bool,
    pub form_computed: bool,
    pub basis_antidiagonal: bool,
    pub q1_in_highest_root_group: bool,
    pub q2_in_second_highest_root_group: bool,
    pub forms_preserved: bool,
    /// `Some` only when the certificate carries expected matrices.
    pub expected_matrices_match: Option<bool>,
    pub y: Option<BigRational>,
    pub x: Option<BigRational>,
    pub lambdas: Option<Vec<BigRational>>,
    pub lambda_ratio: Option<BigRational>,
    pub conclusion: Conclusion,
}

impl VerificationReport {
    fn failed(label: &str, stage: Stage) -> Self {
        VerificationReport {
            label: label.to_string(),
            pair_valid: false,
            class_symplectic: false,
            form_computed: false,
            basis_antidiagonal: false,
            q1_in_highest_root_group: false,
            q2_in_second_highest_root_group: false,
            forms_preserved: false,
            expected_matrices_match: None,
            y: None,
            x: None,
            lambdas: None,
            lambda_ratio: None,
            conclusion: Conclusion::Failed(stage),
        }
    }

    pub fn certified(&self) -> bool {
        self.conclusion == Conclusion::ArithmeticCertified
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {}", self.label)?;
        writeln!(f, "  pair valid:                      {}", yes_no(self.pair_valid))?;
        writeln!(f, "  closure class symplectic:        {}", yes_no(self.class_symplectic))?;
        writeln!(f, "  invariant form (both methods):   {}", yes_no(self.form_computed))?;
        write!(f, "  basis anti-diagonalized:         {}", yes_no(self.basis_antidiagonal))?;
        if let Some(lambdas) = &self.lambdas {
            let parts: Vec<String> = lambdas.iter().map(|l| l.to_string()).collect();
            write!(f, " (lambda = {})", parts.join(", "))?;
            if let Some(r) = &self.lambda_ratio {
                write!(f, " (lambda1/lambda2 = {r})")?;
            }
        }
        writeln!(f)?;
        writeln!(
            f,
            "  q1 in highest root group:        {}",
            yes_no(self.q1_in_highest_root_group)
        )?;
        writeln!(
            f,
            "  q2 in second-highest root group: {}",
            yes_no(self.q2_in_second_highest_root_group)
        )?;
        writeln!(f, "  form preserved by q1, q2:        {}", yes_no(self.forms_preserved))?;
        if let Some(m) = self.expected_matrices_match {
            writeln!(f, "  expected matrices match:         {}", yes_no(m))?;
        }
        writeln!(
            f,
            "  zariski density: inherited from the symplectic closure class (not re-proven)"
        )?;
        match &self.conclusion {
            Conclusion::ArithmeticCertified => {
                let y = self.y.as_ref().map(|v| v.to_string()).unwrap_or_default();
                let x = self.x.as_ref().map(|v| v.to_string()).unwrap_or_default();
                write!(f, "conclusion: ArithmeticCertified; y={y}, x={x}")
            }
            Conclusion::Failed(stage) => write!(f, "conclusion: Failed({stage})"),
        }
    }
}

/// How the verification pipeline obtains its hyperbolic basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisChoice<'a> {
    /// Greedy construction from the standard vectors.
    Constructed,
    /// Greedy construction seeded with `v = (A⁻¹B - I)e₆`, which puts the
    /// unipotent `c` into the highest root group.
    SeededByFixedVector,
    /// An explicit basis matrix (e.g. one carried by a certificate).
    Explicit(&'a RationalMatrix),
}

/// Everything the pipeline derives from a pair before word evaluation.
#[derive(Debug, Clone)]
pub struct PipelineData {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub companion_a: RationalMatrix,
    pub companion_b: RationalMatrix,
    /// Canonical invariant form in the standard basis.
    pub form: SymplecticForm,
    pub basis: RationalMatrix,
    pub lambdas: Vec<BigRational>,
    pub gen_a: RationalMatrix,
    pub gen_b: RationalMatrix,
    pub gen_c: RationalMatrix,
}

impl PipelineData {
    /// Base bindings for word programs: `a`, `b`, `c` and the derived atom
    /// `q1 = b a⁻¹`.
    pub fn word_bindings(&self) -> Result<HashMap<String, RationalMatrix>> {
        let q1 = self.gen_b.mul(&self.gen_a.inverse()?);
        Ok(HashMap::from([
            ("a".to_string(), self.gen_a.clone()),
            ("b".to_string(), self.gen_b.clone()),
            ("c".to_string(), self.gen_c.clone()),
            ("q1".to_string(), q1),
        ]))
    }
}

/// Runs the pipeline up to conjugated generators. Fails with the error of the
/// first stage that cannot complete.
pub fn build_pipeline(
    alpha: &ParameterVector,
    beta: &ParameterVector,
    basis_choice: BasisChoice<'_>,
) -> Result<PipelineData> {
    let (f, _) = params_to_poly(alpha)?;
    let (g, _) = params_to_poly(beta)?;
    let class = zariski_closure_class(&f, &g)?;
    if class != ClosureClass::Symplectic {
        return Err(Error::InvalidPair(format!(
            "closure class is {class}, expected Symplectic"
        )));
    }
    let companion_a = companion(&f)?;
    let companion_b = companion(&g)?;
    let orbital = form_via_orbit(&companion_a, &companion_b)?;
    let solved = form_via_linear_solve(&companion_a, &companion_b)?;
    if !forms_agree(&orbital, &solved) {
        return Err(Error::InvarianceFailed);
    }
    let form = orbital;
    let basis = match basis_choice {
        BasisChoice::Constructed => hyperbolic_basis(&form)?.basis().clone(),
        BasisChoice::SeededByFixedVector => {
            let v = v_vector(&companion_a, &companion_b)?;
            hyperbolic_basis_seeded(&form, &v)?.basis().clone()
        }
        BasisChoice::Explicit(x) => x.clone(),
    };
    let lambdas = verify_antidiagonal(&basis, &form).ok_or(Error::Degenerate)?;
    let (gen_a, gen_b, gen_c) = conjugate_generators(&companion_a, &companion_b, &basis, &form)?;
    Ok(PipelineData {
        f,
        g,
        companion_a,
        companion_b,
        form,
        basis,
        lambdas,
        gen_a,
        gen_b,
        gen_c,
    })
}

/// Verifies one certificate end to end. Every failure is a distinct
/// `Failed(stage)` value; this function does not panic on malformed input.
pub fn verify_certificate(cert: &Certificate) -> VerificationReport {
    let label = cert.label.as_str();

    // stage: pair validity
    let polys = (|| -> Result<(IntPolynomial, IntPolynomial)> {
        let (f, _) = params_to_poly(&cert.alpha)?;
        let (g, _) = params_to_poly(&cert.beta)?;
        if f == g || cyclotomic::have_common_root(&f, &g) || !cyclotomic::is_primitive_pair(&f, &g)
        {
            return Err(Error::InvalidPair("pair filters failed".into()));
        }
        Ok((f, g))
    })();
    let Ok((f, g)) = polys else {
        return VerificationReport::failed(label, Stage::PairValidity);
    };
    let mut report = VerificationReport::failed(label, Stage::Classification);
    report.pair_valid = true;

    // stage: classification
    match zariski_closure_class(&f, &g) {
        Ok(ClosureClass::Symplectic) => {}
        _ => return report,
    }
    report.class_symplectic = true;
    report.conclusion = Conclusion::Failed(Stage::FormComputation);

    // stage: invariant form, both methods
    let (Ok(companion_a), Ok(companion_b)) = (companion(&f), companion(&g)) else {
        return report;
    };
    let (Ok(orbital), Ok(solved)) = (
        form_via_orbit(&companion_a, &companion_b),
        form_via_linear_solve(&companion_a, &companion_b),
    ) else {
        return report;
    };
    if !forms_agree(&orbital, &solved) {
        return report;
    }
    let form = orbital;
    report.form_computed = true;
    report.conclusion = Conclusion::Failed(Stage::BasisConstruction);

    // stage: hyperbolic basis
    let basis = match &cert.basis {
        Some(x) => x.clone(),
        None => match hyperbolic_basis(&form) {
            Ok(h) => h.basis().clone(),
            Err(_) => return report,
        },
    };
    let Some(lambdas) = verify_antidiagonal(&basis, &form) else {
        return report;
    };
    let ratio = &lambdas[0] / &lambdas[1];
    report.basis_antidiagonal = true;
    report.lambdas = Some(lambdas.clone());
    report.lambda_ratio = Some(ratio);
    report.conclusion = Conclusion::Failed(Stage::Conjugation);

    // stage: conjugation
    let Ok((gen_a, gen_b, gen_c)) = conjugate_generators(&companion_a, &companion_b, &basis, &form)
    else {
        return report;
    };

    // stage: word evaluation
    report.conclusion = Conclusion::Failed(Stage::WordEvaluation);
    let Ok(q1_derived) = gen_a.inverse().map(|ai| gen_b.mul(&ai)) else {
        return report;
    };
    let bindings = HashMap::from([
        ("a".to_string(), gen_a),
        ("b".to_string(), gen_b),
        ("c".to_string(), gen_c),
        ("q1".to_string(), q1_derived),
    ]);
    let values = match cert.program.evaluate(&bindings, cert.convention) {
        Ok(v) if v.len() == 2 => v,
        _ => return report,
    };
    let (q1, q2) = (&values[0], &values[1]);

    // stage: root-group membership
    report.conclusion = Conclusion::Failed(Stage::HighestRootMembership);
    let Some(y) = in_highest_root_group(q1) else {
        return report;
    };
    report.q1_in_highest_root_group = true;
    report.y = Some(y);
    report.conclusion = Conclusion::Failed(Stage::SecondHighestRootMembership);
    let Some(x) = in_second_highest_root_group(q2, &lambdas[0], &lambdas[1]) else {
        return report;
    };
    report.q2_in_second_highest_root_group = true;
    report.x = Some(x);

    // stage: form preservation in the hyperbolic basis
    report.conclusion = Conclusion::Failed(Stage::FormPreservation);
    let omega2 = basis.transpose().mul(form.matrix()).mul(&basis);
    let preserved =
        |m: &RationalMatrix| m.transpose().mul(&omega2).mul(m) == omega2;
    if !preserved(q1) || !preserved(q2) {
        return report;
    }
    report.forms_preserved = true;

    // stage: expected matrices, when the certificate carries them
    if cert.expected_q1.is_some() || cert.expected_q2.is_some() {
        let ok_q1 = cert.expected_q1.as_ref().map_or(true, |m| m == q1);
        let ok_q2 = cert.expected_q2.as_ref().map_or(true, |m| m == q2);
        report.expected_matrices_match = Some(ok_q1 && ok_q2);
        if !(ok_q1 && ok_q2) {
            report.conclusion = Conclusion::Failed(Stage::ExpectedMatrices);
            return report;
        }
    }

    report.conclusion = Conclusion::ArithmeticCertified;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::parse_program;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn all_fixtures_certify_with_exact_parameters() {
        let expected: HashMap<&str, (BigRational, BigRational, BigRational)> = HashMap::from([
            ("C-1", (rat(3), rat(52488), BigRational::new((-1).into(), 2.into()))),
            ("C-10", (rat(3), rat(-198), rat(1))),
            ("C-42", (rat(104727556800), rat(17454592800), BigRational::new(1.into(), 4.into()))),
            ("C-59", (rat(-3), rat(-1080), BigRational::new((-1).into(), 2.into()))),
        ]);
        for cert in builtin_fixtures() {
            let report = verify_certificate(&cert);
            assert!(
                report.certified(),
                "{} failed: {:?}",
                cert.label,
                report.conclusion
            );
            let (y, x, ratio) = &expected[cert.label.as_str()];
            assert_eq!(report.y.as_ref(), Some(y), "{} y", cert.label);
            assert_eq!(report.x.as_ref(), Some(x), "{} x", cert.label);
            assert_eq!(report.lambda_ratio.as_ref(), Some(ratio), "{} ratio", cert.label);
            assert_eq!(report.expected_matrices_match, Some(true));
        }
    }

    #[test]
    fn verification_is_deterministic() {
        let cert = &builtin_fixtures()[0];
        let r1 = verify_certificate(cert);
        let r2 = verify_certificate(cert);
        assert_eq!(r1, r2);
    }

    #[test]
    fn tampered_q2_fails_at_membership_not_panic() {
        let mut cert = builtin_fixtures()[0].clone();
        cert.program = parse_program("return q1, a").unwrap();
        cert.expected_q1 = None;
        cert.expected_q2 = None;
        let report = verify_certificate(&cert);
        assert_eq!(
            report.conclusion,
            Conclusion::Failed(Stage::SecondHighestRootMembership)
        );
    }

    #[test]
    fn dropping_final_binding_fails_cleanly() {
        for fixture in builtin_fixtures() {
            let mut cert = fixture.clone();
            cert.program.bindings.pop();
            cert.expected_q1 = None;
            cert.expected_q2 = None;
            let report = verify_certificate(&cert);
            assert!(
                !report.certified(),
                "{} should fail without its final binding",
                cert.label
            );
            assert!(matches!(report.conclusion, Conclusion::Failed(_)));
        }
    }

    #[test]
    fn report_last_line_is_the_conclusion() {
        let report = verify_certificate(&builtin_fixtures()[3]);
        let text = report.to_string();
        assert!(
            text.ends_with("ArithmeticCertified; y=-3, x=-1080"),
            "got: {text}"
        );
    }

    #[test]
    fn interlacing_pair_fails_classification() {
        let cert = Certificate {
            label: "finite".into(),
            alpha: "0,1/2".parse().unwrap(),
            beta: "1/3,2/3".parse().unwrap(),
            basis: None,
            convention: CommutatorConvention::XyXinvYinv,
            program: parse_program("return c, c").unwrap(),
            expected_q1: None,
            expected_q2: None,
        };
        let report = verify_certificate(&cert);
        assert_eq!(report.conclusion, Conclusion::Failed(Stage::Classification));
        assert!(report.pair_valid);
    }
}
