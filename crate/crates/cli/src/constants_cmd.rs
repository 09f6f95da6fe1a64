//! The `constants` subcommand: every exact constant attached to a weight
//! pair and square-free level, plus the assembly identity verdict.

use crate::report::{Exact, Report, Section};
use crate::CmdError;
use gsp4kit_core::constants::{
    c_closed, c_level, cprime, discriminant_constant, norm_constant, pairing_constant, Level,
};

pub fn constants_report(k: u32, kp: u32, level: u64) -> Result<Report, CmdError> {
    if kp > k {
        return Err(CmdError::Usage(format!(
            "--kp must not exceed --k (got k = {k}, kp = {kp})"
        )));
    }
    let n = Level::new(level).map_err(|e| CmdError::Usage(e.to_string()))?;

    let mut report = Report::new(format!(
        "constants for weight ({k}, {kp}) at level {level}"
    ));

    let mut arch = Section::new("archimedean pairing");
    let quad = cprime(k, kp);
    let closed = c_closed(k, kp);
    arch.push("C' (alternating-sum form)", Exact::Rational(quad.clone()));
    arch.push("C (closed form)", Exact::Rational(closed.clone()));
    arch.push("C' = C", Exact::Status(quad == closed));
    report.sections.push(arch);

    let mut asm = Section::new("assembled constants");
    asm.push("level factor C_N", Exact::Rational(c_level(&n)));
    let norm = norm_constant(k, kp, &n);
    let pairing = pairing_constant(k, kp, &n);
    let disc = discriminant_constant(k, kp, &n);
    asm.push("Petersson norm constant", Exact::Pi(norm.clone()));
    asm.push("pairing constant", Exact::Pi(pairing.clone()));
    asm.push("discriminant constant", Exact::Pi(disc.clone()));
    asm.push(
        "discriminant = pairing × norm",
        Exact::Status(pairing * norm == disc),
    );
    report.sections.push(asm);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Format;

    #[test]
    fn scalar_weight_level_one() {
        let r = constants_report(0, 0, 1).unwrap();
        let text = r.render(Format::Markdown, false);
        assert!(text.contains("- C (closed form): 64/3\n"));
        assert!(text.contains("- level factor C_N: 1\n"));
        assert!(text.contains("- discriminant constant: 524288/15*pi^12\n"));
        assert!(r.all_pass());
    }

    #[test]
    fn level_two_factor() {
        let r = constants_report(1, 0, 2).unwrap();
        let text = r.render(Format::Markdown, false);
        assert!(text.contains("- level factor C_N: 2/25\n"));
    }

    #[test]
    fn rejected_inputs() {
        assert!(matches!(constants_report(0, 1, 1), Err(CmdError::Usage(_))));
        assert!(matches!(constants_report(2, 1, 12), Err(CmdError::Usage(_))));
        assert!(matches!(constants_report(2, 1, 0), Err(CmdError::Usage(_))));
    }
}
