//! The `congruence` subcommand: scan two eigen-system files for the primes
//! at which the systems agree, with a certifying maximal ideal per prime.

use crate::report::{Exact, Report, Section};
use crate::CmdError;
use gsp4kit_core::lattice::{
    congruence_prime_scan, parse_eigen_json, CongruenceWitness, EigenSystem, ScanOutcome,
};
use num_traits::ToPrimitive;
use std::path::Path;

fn read_eigen_file(path: &Path) -> Result<EigenSystem, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_eigen_json(&text)
        .map_err(|e| CmdError::Usage(format!("{}: {e}", path.display())))
}

/// "x^2 + 3x + 4" from ascending coefficients over F_p.
fn poly_text(coeffs: &[u64], var: &str) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && e > 0 { String::new() } else { c.to_string() };
        let power = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        terms.push(format!("{coef}{power}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// ψ lives over F_q = F_p[x]/(φ); each coefficient is itself a polynomial
/// in x, parenthesized when it has more than one term.
fn qpoly_text(coeffs: &[Vec<u64>]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        let inner = poly_text(c, "x");
        let power = match e {
            0 => String::new(),
            1 => "y".to_string(),
            _ => format!("y^{e}"),
        };
        if power.is_empty() {
            terms.push(inner);
        } else if inner == "1" {
            terms.push(power);
        } else if c.iter().filter(|&&x| x != 0).count() > 1 {
            terms.push(format!("({inner}){power}"));
        } else {
            terms.push(format!("{inner}{power}"));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn witness_text(w: &CongruenceWitness) -> String {
    format!(
        "maximal ideal ({}, {}, {})",
        w.prime,
        poly_text(&w.phi, "x"),
        qpoly_text(&w.psi)
    )
}

pub fn congruence_report(
    file_a: &Path,
    file_b: &Path,
    bound: u64,
) -> Result<Report, CmdError> {
    let a = read_eigen_file(file_a)?;
    let b = read_eigen_file(file_b)?;
    let outcome =
        congruence_prime_scan(&a, &b, bound).map_err(|e| CmdError::Usage(e.to_string()))?;

    let mut report = Report::new(format!(
        "congruence scan: {} vs {}",
        file_a.display(),
        file_b.display()
    ));
    let mut input = Section::new("input");
    input.push("operators compared", Exact::Text(format!("T_n for n ≤ {bound}")));
    input.push(
        "ring degrees",
        Exact::Text(format!("{} and {}", a.degree(), b.degree())),
    );
    report.sections.push(input);

    match outcome {
        ScanOutcome::Identical => {
            let mut s = Section::new("result");
            s.push(
                "identical systems",
                Exact::Text("the systems agree along an embedding; congruent modulo every prime".into()),
            );
            report.sections.push(s);
        }
        ScanOutcome::Congruences(witnesses) => {
            let primes: Vec<u64> = witnesses
                .iter()
                .map(|w| w.prime.to_u64().expect("scan primes fit u64"))
                .collect();
            let mut s = Section::new("result");
            s.push("congruence primes", Exact::Primes(primes));
            report.sections.push(s);
            let mut ws = Section::new("witnesses");
            for w in &witnesses {
                ws.push(format!("p = {}", w.prime), Exact::Text(witness_text(w)));
            }
            report.sections.push(ws);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Format;
    use std::io::Write;

    fn write_file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn polynomial_rendering() {
        assert_eq!(poly_text(&[0, 1], "x"), "x");
        assert_eq!(poly_text(&[4, 1], "x"), "x + 4");
        assert_eq!(poly_text(&[2, 0, 3], "x"), "3x^2 + 2");
        assert_eq!(qpoly_text(&[vec![], vec![1]]), "y");
        assert_eq!(qpoly_text(&[vec![3, 1], vec![1]]), "y + x + 3");
        assert_eq!(qpoly_text(&[vec![0, 2], vec![3, 1], vec![1]]), "y^2 + (x + 3)y + 2x");
    }

    #[test]
    fn small_congruence_scan() {
        let a = write_file(r#"{ "min_poly": [0, 1], "values": { "T_2": [0] } }"#);
        let b = write_file(r#"{ "min_poly": [0, 1], "values": { "T_2": [15] } }"#);
        let r = congruence_report(a.path(), b.path(), 10).unwrap();
        let text = r.render(Format::Markdown, false);
        assert!(text.contains("- congruence primes: [3, 5]\n"), "{text}");
        assert!(text.contains("- p = 3: maximal ideal (3, x, y)\n"), "{text}");
    }

    #[test]
    fn identical_files_hit_the_sentinel() {
        let a = write_file(r#"{ "min_poly": [0, 1], "values": { "T_2": [7] } }"#);
        let r = congruence_report(a.path(), a.path(), 10).unwrap();
        let text = r.render(Format::Markdown, false);
        assert!(text.contains("identical systems"));
    }

    #[test]
    fn bound_zero_is_an_empty_range() {
        let a = write_file(r#"{ "min_poly": [0, 1], "values": { "T_2": [7] } }"#);
        let err = congruence_report(a.path(), a.path(), 0).unwrap_err();
        assert!(matches!(err, CmdError::Usage(m) if m == "empty comparison range"));
    }

    #[test]
    fn label_mismatch_is_reported() {
        let a = write_file(r#"{ "min_poly": [0, 1], "values": { "T_2": [7] } }"#);
        let b = write_file(r#"{ "min_poly": [0, 1], "values": { "T_3": [7] } }"#);
        let err = congruence_report(a.path(), b.path(), 10).unwrap_err();
        assert!(matches!(err, CmdError::Usage(m) if m.contains("missing")));
    }
}
