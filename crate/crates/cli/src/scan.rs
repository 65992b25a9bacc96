use qgamma::kernels::{scan_kernel, Kernel, KERNEL_IDS};

use crate::args::ScanArgs;
use crate::format::{real, Table};
use crate::{CliError, Report};

pub fn run(a: &ScanArgs) -> Result<Report, CliError> {
    if !KERNEL_IDS.contains(&a.kernel.as_str()) {
        return Err(CliError::Usage(format!(
            "unknown kernel '{}'; expected one of {}",
            a.kernel,
            KERNEL_IDS.join(", ")
        )));
    }
    let given = a.params.to_params();
    let kernel = Kernel::from_id(&a.kernel, &given)?;
    let bound = kernel.params();
    if let Some(extra) = given.names().find(|n| bound.get(n).is_none()) {
        return Err(CliError::Usage(format!(
            "kernel {} does not take --{extra}",
            a.kernel
        )));
    }
    if given.list().is_some() && bound.list().is_none() {
        return Err(CliError::Usage(format!(
            "kernel {} does not take --a-list",
            a.kernel
        )));
    }

    let report = scan_kernel(&kernel, &a.grid())?;
    let params = bound.to_string();
    let mut t = Table::new(&["kernel", "params", "kind", "t", "value"]);
    let mut row = |kind: &str, tv: String, value: String| {
        t.push(vec![
            a.kernel.clone(),
            params.clone(),
            kind.to_string(),
            tv,
            value,
        ]);
    };
    for (i, &(tv, w)) in report.samples.iter().enumerate() {
        row(if i == 0 { "limit" } else { "sample" }, real(tv), real(w));
    }
    row("min", String::new(), real(report.min));
    row("max", String::new(), real(report.max));
    row(
        "sign_change_count",
        String::new(),
        report.sign_change_count.to_string(),
    );
    for &(lo, hi) in &report.brackets {
        row("sign_change_bracket", real(lo), real(hi));
    }
    row(
        "expected",
        String::new(),
        report.expected.as_str().to_string(),
    );
    row(
        "matches",
        String::new(),
        u8::from(report.matches).to_string(),
    );
    Ok(Report {
        csv: t.to_bytes(),
        passed: report.matches,
    })
}
