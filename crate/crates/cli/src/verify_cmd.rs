//! The `verify` subcommand: named invariant suites, one PASS/FAIL row per
//! check plus a count summary. Randomized checks run from fixed seeds so the
//! report is byte-stable.

use crate::report::{Exact, Report, Section};
use crate::CmdError;
use gsp4kit_core::exactnum::{rat, zeta_even_over_pi, PiQuantity};
use gsp4kit_core::lattice::{
    dual_index, gram_discriminant, random_dual_index_instance, random_split_instance,
    split_project_duality_check,
};
use gsp4kit_core::liealg::{
    cartan_decomposition_check, weyl_construct, weyl_dim, AlgebraicWeight, RootVectors,
};
use gsp4kit_core::ktypes::{
    decompose_tensor_space, minimal_k_types, pairing_coefficient, projection_onto_31,
    projection_table, standard_w_basis, verify_projection_as_lowering, Gen, TauModule, TauPair,
};
use gsp4kit_core::modforms::{
    cusp_eigensystems, delta, echelon_span_is_hecke_stable, eisenstein, eisenstein_eigensystem,
    hecke_operator,
};
use gsp4kit_core::{constants, exactnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    Lie,
    Ktypes,
    Constants,
    Lattice,
    Modforms,
    All,
}

type Check = (String, bool);

fn check(label: impl Into<String>, ok: bool) -> Check {
    (label.into(), ok)
}

fn suite_lie() -> Vec<Check> {
    let rv = RootVectors::build(&rat(1));
    let mut out = vec![check(
        "Cartan decomposition closes under brackets inside sp(4)",
        cartan_decomposition_check(&rv),
    )];
    for (k, kp, c, dim) in [(1, 0, 1, 4i64), (1, 1, 0, 5), (2, 0, 2, 10)] {
        let m = weyl_construct(&AlgebraicWeight::new(k, kp, c));
        let ok = m.basis.len() as i64 == dim
            && weyl_dim(k, kp) == dim
            && m.contraction_annihilation_check();
        out.push(check(
            format!("weight ({k}, {kp}) module has dimension {dim} and kills all contractions"),
            ok,
        ));
    }
    out
}

fn suite_ktypes() -> Vec<Check> {
    let rv = RootVectors::build(&rat(1));
    let mut out = Vec::new();

    let p = projection_onto_31(&rv);
    out.push(check(
        "projection matrix onto τ_(3,−1) has all 81 expected entries",
        p == projection_table(),
    ));
    out.push(check(
        "projection factors through the lowering recursion",
        verify_projection_as_lowering(&rv),
    ));

    let summands = decompose_tensor_space(&rv);
    let dims: Vec<usize> = summands.iter().map(|s| s.string.len()).collect();
    out.push(check(
        "tensor space splits into strings of lengths 5 + 3 + 1",
        dims == vec![5, 3, 1],
    ));
    let w = standard_w_basis();
    out.push(check(
        "leading summand realizes the standard w-basis exactly",
        summands[0].string == w,
    ));

    // Ladder oracle: LOWER^i then RAISE^i on the highest vector of τ_(d,0)
    // gives the scalar whose alternating version is the pairing coefficient.
    let ladder_ok = (0..=12u32).all(|d| {
        let tau = TauModule::new(TauPair::new(d as i64, 0));
        (0..=d).all(|i| {
            let mut v = tau.basis_vector(d as usize);
            for _ in 0..i {
                v = tau.act(Gen::Lower, &v);
            }
            for _ in 0..i {
                v = tau.act(Gen::Raise, &v);
            }
            let ladder_scalar = v[d as usize].clone();
            let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
            pairing_coefficient(d, i) == sign * ladder_scalar
        })
    });
    out.push(check(
        "pairing coefficient matches the raise/lower ladder for d ≤ 12",
        ladder_ok,
    ));

    let kt = minimal_k_types(2, 1);
    out.push(check(
        "four packet members carry the advertised minimal K-types",
        kt[0].tau == TauPair::new(5, 4)
            && kt[1].tau == TauPair::new(5, -2)
            && kt[2].tau == TauPair::new(2, -5)
            && kt[3].tau == TauPair::new(-4, -5),
    ));
    out
}

fn suite_constants() -> Vec<Check> {
    let mut out = Vec::new();

    let pairs: Vec<(u32, u32)> = (0..=12u32)
        .flat_map(|k| (0..=k).map(move |kp| (k, kp)))
        .collect();
    let quads = constants::cprime_batch(&pairs);
    let identity_ok = pairs
        .iter()
        .zip(&quads)
        .all(|(&(k, kp), q)| *q == constants::c_closed(k, kp));
    out.push(check(
        format!("C' = C for {} weight pairs", pairs.len()),
        identity_ok,
    ));

    out.push(check(
        "alternation weights sum to 4/3",
        constants::alternation_weight_sum() == exactnum::ratio(4, 3),
    ));
    out.push(check(
        "rising-power telescoping through m = 30",
        (0..=30u32).all(|m| {
            constants::rising_power_sum(m)
                == exactnum::pochhammer(i64::from(m) + 1, 5) / rat(5)
        }),
    ));
    let mut ratio_ok = true;
    for m in 0..=8u32 {
        for r in 0..=4u32 {
            for i in 0..=m {
                for u in 0..=r {
                    for up in 0..=r {
                        ratio_ok &= constants::coefficient_ratio_identity_check(m, i, u, up, r);
                    }
                }
            }
        }
    }
    out.push(check("coefficient-ratio identity through m = 8", ratio_ok));

    let volume_ok = constants::siegel_volume() == PiQuantity::new(exactnum::ratio(1, 270), 3);
    out.push(check("Siegel volume is π³/270", volume_ok));

    let mut assembly_ok = true;
    for level in [1u64, 2, 3, 5, 6, 7, 10] {
        let n = constants::Level::new(level).expect("square-free level");
        for k in 0..=8u32 {
            for kp in 0..=k {
                let product =
                    constants::pairing_constant(k, kp, &n) * constants::norm_constant(k, kp, &n);
                if product != constants::discriminant_constant(k, kp, &n) {
                    assembly_ok = false;
                }
            }
        }
    }
    out.push(check(
        "discriminant = pairing × norm across weights ≤ 8 and seven levels",
        assembly_ok,
    ));
    out
}

fn suite_lattice() -> Vec<Check> {
    let mut out = Vec::new();
    for p in [5u64, 7, 691] {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6c61_7474 ^ p);
        let ok = (0..20).all(|_| {
            let (l, b) = random_dual_index_instance(&mut rng, 3, p);
            let idx = dual_index(&l, &b).expect("instance is p-integral");
            let disc = gram_discriminant(&l, &b).expect("instance is p-integral");
            let v = exactnum::rational_valuation(p, &disc).expect("nonzero discriminant");
            idx == exactnum::rational_pow(&rat(p as i64), v)
        });
        out.push(check(
            format!("dual index equals the discriminant {p}-part on 20 seeded instances"),
            ok,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7370_6c69);
    let symmetric_ok = (0..15).all(|_| {
        let inst = random_split_instance(&mut rng, 4, 5, false);
        split_project_duality_check(&inst.lattice, &inst.form, &inst.splitter) == Ok(true)
    });
    out.push(check(
        "projection of a self-dual lattice stays self-dual (15 seeded instances)",
        symmetric_ok,
    ));
    let alternating_ok = (0..5).all(|_| {
        let inst = random_split_instance(&mut rng, 4, 5, true);
        split_project_duality_check(&inst.lattice, &inst.form, &inst.splitter) == Ok(true)
    });
    out.push(check(
        "alternating-form variant passes (5 seeded instances)",
        alternating_ok,
    ));
    out
}

fn suite_modforms() -> Vec<Check> {
    let mut out = Vec::new();
    let e4 = eisenstein(4, 2);
    let e6 = eisenstein(6, 2);
    let e12 = eisenstein(12, 2);
    out.push(check(
        "Eisenstein normalizations 240, −504, 65520/691",
        *e4.coeff(1) == rat(240)
            && *e6.coeff(1) == rat(-504)
            && *e12.coeff(1) == exactnum::ratio(65520, 691),
    ));
    let d = delta(16);
    out.push(check(
        "Δ starts q − 24q² + 252q³ and is a T₂ eigenform",
        *d.coeff(1) == rat(1)
            && *d.coeff(2) == rat(-24)
            && *d.coeff(3) == rat(252)
            && hecke_operator(&d, 12, 2) == d.truncate(8).scale(&rat(-24)),
    ));
    let frozen_a2 = [(12u32, -24i64), (16, 216), (18, -528), (20, 456), (22, -288), (26, -48)];
    out.push(check(
        "six one-dimensional weights give the classical a₂ eigenvalues",
        frozen_a2
            .iter()
            .all(|&(w, a2)| *cusp_eigensystems(w, 20).value(2) == BigInt::from(a2)),
    ));
    out.push(check(
        "echelon span is T₂-stable for weights 12, 16, 26",
        [12, 16, 26].iter().all(|&w| echelon_span_is_hecke_stable(w, 16)),
    ));

    let modulus = BigInt::from(691);
    let tau = cusp_eigensystems(12, 200);
    let sigma = eisenstein_eigensystem(12, 200);
    let congruent = (1..=200).all(|n| {
        (sigma.value(n) - tau.value(n)).mod_floor(&modulus).is_zero()
    });
    out.push(check("τ(n) ≡ σ₁₁(n) mod 691 for n ≤ 200", congruent));
    out.push(check(
        "691 is the numerator of ζ(12)/π¹²",
        zeta_even_over_pi(12).numer() == &modulus,
    ));
    out
}

fn section_for(name: &str, checks: Vec<Check>) -> Section {
    let mut s = Section::new(name);
    for (label, ok) in checks {
        s.push(label, Exact::Status(ok));
    }
    s
}

pub fn verify_report(suite: Suite) -> Result<Report, CmdError> {
    let mut report = Report::new(format!(
        "verification: {}",
        match suite {
            Suite::Lie => "lie",
            Suite::Ktypes => "ktypes",
            Suite::Constants => "constants",
            Suite::Lattice => "lattice",
            Suite::Modforms => "modforms",
            Suite::All => "all",
        }
    ));
    let named: Vec<(&str, fn() -> Vec<Check>)> = match suite {
        Suite::Lie => vec![("lie", suite_lie)],
        Suite::Ktypes => vec![("ktypes", suite_ktypes)],
        Suite::Constants => vec![("constants", suite_constants)],
        Suite::Lattice => vec![("lattice", suite_lattice)],
        Suite::Modforms => vec![("modforms", suite_modforms)],
        Suite::All => vec![
            ("lie", suite_lie),
            ("ktypes", suite_ktypes),
            ("constants", suite_constants),
            ("lattice", suite_lattice),
            ("modforms", suite_modforms),
        ],
    };
    let mut passed = 0u64;
    let mut total = 0u64;
    for (name, run) in named {
        let checks = run();
        total += checks.len() as u64;
        passed += checks.iter().filter(|(_, ok)| *ok).count() as u64;
        report.sections.push(section_for(name, checks));
    }
    let mut summary = Section::new("summary");
    summary.push("checks passed", Exact::Text(format!("{passed}/{total}")));
    summary.push("verdict", Exact::Status(passed == total));
    report.sections.push(summary);
    Ok(report)
}
