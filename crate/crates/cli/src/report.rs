//! Report document: a machine section (canonical JSON with exact rational
//! strings, byte-identical across runs) and a human-readable rendering.

use omnf_core::{
    format_scalar, FiniteSymmetryGroup, Jet, MatrixClass, NormalFormReport, PolyVectorField,
    QMatrix, SparsePoly,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermReport {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

pub type PolyReport = Vec<TermReport>;

pub fn poly_report(p: &SparsePoly) -> PolyReport {
    p.terms()
        .map(|(m, c)| TermReport {
            exponents: m.exps().to_vec(),
            coefficient: format_scalar(c),
        })
        .collect()
}

pub fn matrix_report(m: &QMatrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|r| r.iter().map(format_scalar).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupReport {
    pub order: usize,
    pub elements: Vec<Vec<Vec<String>>>,
    pub sigma1: Vec<i8>,
    pub sigma2: Vec<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_classes: Option<Vec<String>>,
    pub types: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EquivariantCertReport {
    pub invariant_space_dim: usize,
    pub constrained_image_dim: usize,
    pub complement_dim: usize,
    pub intersection_dim: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    pub ambient_dim: usize,
    pub image_dim: usize,
    pub complement_dim: usize,
    pub intersection_dim: usize,
    pub fischer_adjoint: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivariant: Option<EquivariantCertReport>,
    pub complement_basis: Vec<PolyReport>,
    pub resonant: PolyReport,
    pub generator: PolyReport,
    pub removed: PolyReport,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MachineReport {
    pub task: String,
    pub dimension: usize,
    pub omega: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupReport>,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linearization: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate_linear_part: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<DegreeReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<PolyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<Vec<PolyReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_order: Option<u32>,
    pub certificates_passed: bool,
}

pub struct ReportDocument {
    pub machine: MachineReport,
    pub human: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Both,
}

impl ReportDocument {
    pub fn render(&self, format: Format) -> String {
        let json = serde_json::to_string_pretty(&self.machine).expect("report serializes");
        match format {
            Format::Json => json,
            Format::Text => self.human.clone(),
            Format::Both => format!("{}\n--- machine report (json) ---\n{}\n", self.human, json),
        }
    }
}

pub fn group_report(group: &FiniteSymmetryGroup, classes: Option<&[MatrixClass]>) -> GroupReport {
    let (types, _) = group.classify_symmetry_types();
    GroupReport {
        order: group.order(),
        elements: group.elements().iter().map(matrix_report).collect(),
        sigma1: group.sigma1().values().iter().map(|s| s.to_i8()).collect(),
        sigma2: group.sigma2().values().iter().map(|s| s.to_i8()).collect(),
        matrix_classes: classes.map(|cs| cs.iter().map(|c| c.to_string()).collect()),
        types: types.iter().map(|t| t.to_string()).collect(),
    }
}

pub fn render_group_table(
    group: &FiniteSymmetryGroup,
    classes: Option<&[MatrixClass]>,
    out: &mut String,
) {
    let (types, _) = group.classify_symmetry_types();
    out.push_str(&format!("group of order {}\n", group.order()));
    out.push_str("  #  class            sigma1  sigma2  type  matrix\n");
    for i in 0..group.order() {
        let class = classes
            .map(|c| c[i].to_string())
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "  {:<2} {:<16} {:<7} {:<7} {:<5} {}\n",
            i,
            class,
            group.sigma1().get(i).to_string(),
            group.sigma2().get(i).to_string(),
            types[i].to_string(),
            group.element(i),
        ));
    }
}

fn render_field(field: &PolyVectorField) -> String {
    let comps: Vec<String> = field.components().iter().map(|c| c.to_string()).collect();
    format!("({})", comps.join(", "))
}

/// Builds the full document for a pipeline run.
pub fn normal_form_document(
    task_name: &str,
    omega: &QMatrix,
    report: &NormalFormReport,
    group: Option<&FiniteSymmetryGroup>,
    classes: Option<&[MatrixClass]>,
    checks: Vec<CheckReport>,
) -> ReportDocument {
    let degrees: Vec<DegreeReport> = report
        .degrees
        .iter()
        .map(|d| DegreeReport {
            degree: d.split.degree,
            ambient_dim: d.certificate.ambient_dim,
            image_dim: d.certificate.image_dim,
            complement_dim: d.complement.dim(),
            intersection_dim: d.certificate.intersection_dim,
            fischer_adjoint: d.certificate.fischer_adjoint,
            equivariant: d
                .certificate
                .equivariant
                .as_ref()
                .map(|e| EquivariantCertReport {
                    invariant_space_dim: e.invariant_space_dim,
                    constrained_image_dim: e.constrained_image_dim,
                    complement_dim: e.complement_dim,
                    intersection_dim: e.intersection_dim,
                }),
            complement_basis: d.complement.basis_polys().iter().map(poly_report).collect(),
            resonant: poly_report(&d.split.resonant),
            generator: poly_report(&d.split.generator),
            removed: poly_report(&d.split.removed),
        })
        .collect();

    let mut certificates_passed = true;
    if let Some(s) = &report.symmetry {
        certificates_passed =
            s.normal_form_invariant && s.field_equivariant && s.resonant_terms_in_complement;
    }

    let machine = MachineReport {
        task: task_name.into(),
        dimension: omega.nrows(),
        omega: matrix_report(omega),
        order: Some(report.order),
        group: group.map(|g| group_report(g, classes)),
        checks: checks.clone(),
        linearization: Some(matrix_report(&report.linearization)),
        degenerate_linear_part: Some(report.degenerate_linear_part),
        degrees: Some(degrees),
        normal_form: Some(poly_report(report.normal_form.poly())),
        field: Some(report.field.components().iter().map(poly_report).collect()),
        field_order: Some(report.field_order),
        certificates_passed,
    };

    let mut human = String::new();
    human.push_str(&format!("task: {task_name}\n"));
    human.push_str(&format!(
        "dimension: {}, truncation order: {}\n",
        omega.nrows(),
        report.order
    ));
    human.push_str(&format!("omega: {omega}\n"));
    human.push_str(&format!("linearization L: {}\n", report.linearization));
    if report.degenerate_linear_part {
        human.push_str("linear part is zero: the input is already a normal form\n");
    }
    if let Some(g) = group {
        render_group_table(g, classes, &mut human);
    }
    for check in &checks {
        human.push_str(&format!(
            "check {}: {}\n",
            check.name,
            if check.passed { "ok" } else { "FAILED" }
        ));
    }
    human.push('\n');
    for d in &report.degrees {
        human.push_str(&format!(
            "degree {}: dim {}, image {}, complement {}, intersection {}\n",
            d.split.degree,
            d.certificate.ambient_dim,
            d.certificate.image_dim,
            d.complement.dim(),
            d.certificate.intersection_dim,
        ));
        if let Some(e) = &d.certificate.equivariant {
            human.push_str(&format!(
                "  isotypic dim {}, constrained image {}, equivariant complement {}\n",
                e.invariant_space_dim, e.constrained_image_dim, e.complement_dim
            ));
        }
        for b in d.complement.basis_polys() {
            human.push_str(&format!("  complement basis: {b}\n"));
        }
        human.push_str(&format!("  K^{} = {}\n", d.split.degree, d.split.resonant));
        if !d.split.generator.is_zero() {
            human.push_str(&format!(
                "  xi^{} = {}\n",
                d.split.degree, d.split.generator
            ));
        }
    }
    human.push_str(&format!("\nnormal form K = {}\n", report.normal_form));
    human.push_str(&format!(
        "field X_K = {} + O(|x|^{})\n",
        render_field(&report.field),
        report.field_order + 1
    ));
    if let Some(s) = &report.symmetry {
        human.push_str(&format!(
            "symmetry certificates: K invariant: {}, X_K equivariant: {}, resonant terms in complement: {}\n",
            s.normal_form_invariant, s.field_equivariant, s.resonant_terms_in_complement
        ));
    }
    human.push_str(&format!(
        "certificates: {}\n",
        if certificates_passed {
            "all passed"
        } else {
            "FAILED"
        }
    ));

    ReportDocument { machine, human }
}

/// Document for classify and verify runs (no pipeline output).
pub fn check_document(
    task_name: &str,
    omega: &QMatrix,
    group: Option<&FiniteSymmetryGroup>,
    classes: Option<&[MatrixClass]>,
    checks: Vec<CheckReport>,
    linearization: Option<&QMatrix>,
    hamiltonian: Option<&Jet>,
) -> ReportDocument {
    let machine = MachineReport {
        task: task_name.into(),
        dimension: omega.nrows(),
        omega: matrix_report(omega),
        order: None,
        group: group.map(|g| group_report(g, classes)),
        checks: checks.clone(),
        linearization: linearization.map(matrix_report),
        degenerate_linear_part: None,
        degrees: None,
        normal_form: None,
        field: None,
        field_order: None,
        certificates_passed: checks.iter().all(|c| c.passed),
    };

    let mut human = String::new();
    human.push_str(&format!("task: {task_name}\n"));
    human.push_str(&format!("omega: {omega}\n"));
    if let Some(l) = linearization {
        human.push_str(&format!("linearization L: {l}\n"));
    }
    if let Some(h) = hamiltonian {
        human.push_str(&format!("hamiltonian: {}\n", h.poly()));
    }
    if let Some(g) = group {
        render_group_table(g, classes, &mut human);
    }
    for check in &checks {
        human.push_str(&format!(
            "check {}: {}\n",
            check.name,
            if check.passed { "ok" } else { "FAILED" }
        ));
    }
    ReportDocument { machine, human }
}
