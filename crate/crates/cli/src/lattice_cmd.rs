//! The `lattice` subcommand: discriminant, dual basis, or the splitting
//! duality verdict for a lattice file. `--prime` re-reads the same data at a
//! different localization.

use crate::report::{Exact, Report, Section};
use crate::CmdError;
use gsp4kit_core::exactnum::{format_rational, rat, rational_pow, rational_valuation, BigRational};
use gsp4kit_core::lattice::{
    dual_index, dual_lattice, fp, gram_discriminant, parse_lattice_json,
    split_project_duality_check, LatticeError, LatticeFile, LatticeZp,
};
use num_integer::Integer;
use num_traits::Zero;
use std::path::Path;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum LatticeAction {
    Disc,
    Dual,
    DualityCheck,
}

pub fn read_lattice_file(path: &Path, prime: Option<u64>) -> Result<LatticeFile, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut file = parse_lattice_json(&text).map_err(|e| CmdError::Usage(e.to_string()))?;
    if let Some(p) = prime {
        file.lattice = LatticeZp::new(p, file.lattice.basis().clone())
            .map_err(|e| CmdError::Usage(e.to_string()))?;
    }
    Ok(file)
}

/// "p^v × (non-)square unit": odd p by Euler's criterion, p = 2 by the
/// class of the unit part mod 8.
fn square_class(disc: &BigRational, p: u64) -> String {
    let v = rational_valuation(p, disc).expect("nonzero discriminant");
    let unit = disc / rational_pow(&rat(p as i64), v);
    if p == 2 {
        // an odd denominator is its own inverse mod 8
        let num = unit.numer().mod_floor(&8.into());
        let den = unit.denom().mod_floor(&8.into());
        let class = (num * den).mod_floor(&8.into());
        format!("2^{v} × unit ≡ {class} (mod 8)")
    } else {
        let u = fp::rational_mod_p(&unit, p);
        let euler = fp::mod_pow(u, (p - 1) / 2, p);
        let kind = if euler == 1 { "square unit" } else { "non-square unit" };
        format!("{p}^{v} × {kind}")
    }
}

pub fn lattice_report(path: &Path, action: LatticeAction, prime: Option<u64>) -> Result<Report, CmdError> {
    let file = read_lattice_file(path, prime)?;
    let l = &file.lattice;
    let b = &file.form;
    let p = l.prime();

    let mut report = Report::new(format!("lattice at p = {p}: {}", path.display()));
    let mut shape = Section::new("input");
    shape.push("prime", Exact::Count(p));
    shape.push("dimension", Exact::Count(l.dim() as u64));
    shape.push(
        "pairing",
        Exact::Text(if b.alternating() { "alternating".into() } else { "symmetric".into() }),
    );
    report.sections.push(shape);

    match action {
        LatticeAction::Disc => {
            let disc = gram_discriminant(l, b).map_err(|e| CmdError::Usage(e.to_string()))?;
            if disc.is_zero() {
                return Err(CmdError::Check("Gram discriminant is zero".into()));
            }
            let mut s = Section::new("discriminant");
            let v = rational_valuation(p, &disc).expect("nonzero discriminant");
            s.push("Gram discriminant", Exact::Rational(disc.clone()));
            s.push(format!("valuation at {p}"), Exact::Text(v.to_string()));
            s.push("square class", Exact::Text(square_class(&disc, p)));
            report.sections.push(s);
        }
        LatticeAction::Dual => {
            let dual = dual_lattice(l, b).map_err(|e| CmdError::Usage(e.to_string()))?;
            let mut s = Section::new("dual lattice");
            for i in 0..dual.dim() {
                let row: Vec<String> =
                    dual.basis().row(i).iter().map(format_rational).collect();
                s.push(format!("dual basis row {i}"), Exact::Text(format!("[{}]", row.join(", "))));
            }
            match dual_index(l, b) {
                Ok(idx) => s.push("index of L in L*", Exact::Rational(idx)),
                Err(LatticeError::NotContainedInDual) => s.push(
                    "index of L in L*",
                    Exact::Text("undefined: L pairs non-integrally with itself".into()),
                ),
                Err(e) => return Err(CmdError::Usage(e.to_string())),
            }
            report.sections.push(s);
        }
        LatticeAction::DualityCheck => {
            let splitter = file.splitter.as_ref().ok_or_else(|| {
                CmdError::Usage(
                    "duality-check needs a \"splitter\" matrix in the input file".into(),
                )
            })?;
            let mut s = Section::new("splitting duality");
            match split_project_duality_check(l, b, splitter) {
                Ok(ok) => {
                    s.push("projected sublattice is self-dual in its subspace", Exact::Status(ok));
                }
                Err(e) => {
                    s.push("splitter rejected", Exact::Text(e.to_string()));
                    s.push("projected sublattice is self-dual in its subspace", Exact::Status(false));
                }
            }
            report.sections.push(s);
        }
    }
    Ok(report)
}
