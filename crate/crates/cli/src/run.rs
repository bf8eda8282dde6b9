//! Task dispatch: classify, verify, and the normal-form pipelines.

use omnf_core::{
    equivariant_normal_form, hamiltonian_field, is_hamiltonian_matrix, normal_form, PolyVectorField,
};

use crate::error::CliError;
use crate::problem::{ProblemSpec, Task};
use crate::report::{check_document, normal_form_document, CheckReport, ReportDocument};

pub fn run_task(
    spec: &ProblemSpec,
    task: Task,
    equivariant: bool,
    order_flag: Option<u32>,
) -> Result<ReportDocument, CliError> {
    match task {
        Task::Classify => classify(spec),
        Task::Verify => verify(spec),
        Task::NormalForm => run_normal_form(spec, equivariant, order_flag),
    }
}

fn classify(spec: &ProblemSpec) -> Result<ReportDocument, CliError> {
    let group = spec
        .group
        .as_ref()
        .ok_or_else(|| CliError::validation("classify requires a [group] block".into()))?;
    let classes = group
        .verify_semisymplectic(&spec.form)
        .map_err(CliError::from)?;
    let checks = vec![CheckReport {
        name: "semisymplectic action (classes match sigma_1)".into(),
        passed: true,
    }];
    Ok(check_document(
        Task::Classify.name(),
        spec.form.matrix(),
        Some(group),
        Some(&classes),
        checks,
        None,
        None,
    ))
}

fn verify(spec: &ProblemSpec) -> Result<ReportDocument, CliError> {
    let mut checks = Vec::new();
    checks.push(CheckReport {
        name: "omega is skew-symmetric and invertible".into(),
        passed: true, // enforced at parse time
    });

    let mut linearization = None;
    let mut hamiltonian = None;
    if spec.has_hamiltonian() {
        // assembling validates that any linear part is omega-Hamiltonian
        let h = spec.assemble_hamiltonian(spec.order.unwrap_or(2).max(2))?;
        let h2 = h.poly().homogeneous_component(2);
        let l = hamiltonian_field(&h2, &spec.form)
            .map_err(CliError::from)?
            .linear_matrix()
            .expect("field of a quadratic is linear");
        checks.push(CheckReport {
            name: "L is omega-Hamiltonian".into(),
            passed: true,
        });
        if !is_hamiltonian_matrix(&l.transpose(), &spec.form).map_err(CliError::from)? {
            return Err(CliError::from(omnf_core::Error::SNotSymplectic));
        }
        checks.push(CheckReport {
            name: "L^T is omega-Hamiltonian (S acts symplectically)".into(),
            passed: true,
        });
        linearization = Some(l);
        hamiltonian = Some(h);
    }

    let mut classes = None;
    if let Some(group) = &spec.group {
        classes = Some(
            group
                .verify_semisymplectic(&spec.form)
                .map_err(CliError::from)?,
        );
        checks.push(CheckReport {
            name: "semisymplectic action (classes match sigma_1)".into(),
            passed: true,
        });
        if let (Some(h), Some(l)) = (&hamiltonian, &linearization) {
            if !group
                .check_invariance(h.poly(), &group.sigma12())
                .map_err(CliError::from)?
            {
                return Err(CliError::Hypothesis(
                    "Hamiltonian is not sigma_1 sigma_2-invariant under the group".into(),
                ));
            }
            checks.push(CheckReport {
                name: "H is sigma_1 sigma_2-invariant".into(),
                passed: true,
            });
            if !group
                .check_equivariance(&PolyVectorField::from_linear(l), group.sigma2().values())
                .map_err(CliError::from)?
            {
                return Err(CliError::Hypothesis(
                    "linearization is not sigma_2-equivariant under the group".into(),
                ));
            }
            checks.push(CheckReport {
                name: "L is sigma_2-equivariant".into(),
                passed: true,
            });
        }
    }

    Ok(check_document(
        Task::Verify.name(),
        spec.form.matrix(),
        spec.group.as_ref(),
        classes.as_deref(),
        checks,
        linearization.as_ref(),
        hamiltonian.as_ref(),
    ))
}

fn run_normal_form(
    spec: &ProblemSpec,
    equivariant: bool,
    order_flag: Option<u32>,
) -> Result<ReportDocument, CliError> {
    if !spec.has_hamiltonian() {
        return Err(CliError::validation(
            "normal-form requires a [hamiltonian] block".into(),
        ));
    }
    let order = order_flag.or(spec.order).ok_or_else(|| {
        CliError::validation("normal-form requires --order or an `order` field".into())
    })?;
    if order < 2 {
        return Err(CliError::validation(format!(
            "order must be at least 2, found {order}"
        )));
    }
    let h = spec.assemble_hamiltonian(order)?;

    if equivariant {
        let group = spec
            .group
            .as_ref()
            .ok_or_else(|| CliError::validation("--equivariant requires a [group] block".into()))?;
        let classes = group
            .verify_semisymplectic(&spec.form)
            .map_err(CliError::from)?;
        let report =
            equivariant_normal_form(&h, &spec.form, group, order).map_err(CliError::from)?;
        let checks = vec![
            CheckReport {
                name: "semisymplectic action (classes match sigma_1)".into(),
                passed: true,
            },
            CheckReport {
                name: "H is sigma_1 sigma_2-invariant".into(),
                passed: true,
            },
        ];
        Ok(normal_form_document(
            "normal-form --equivariant",
            spec.form.matrix(),
            &report,
            Some(group),
            Some(&classes),
            checks,
        ))
    } else {
        let report = normal_form(&h, &spec.form, order).map_err(CliError::from)?;
        Ok(normal_form_document(
            "normal-form",
            spec.form.matrix(),
            &report,
            None,
            None,
            Vec::new(),
        ))
    }
}
