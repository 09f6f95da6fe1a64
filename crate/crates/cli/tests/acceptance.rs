//! Release gate for the toolkit: ten end-to-end checks covering the constant
//! identities, the nine-dimensional tensor decomposition, the p-local duality
//! laws, and the 691 congruence. Each test prints one PASS/FAIL line (visible
//! with `--nocapture`) and enforces its runtime budget where one applies.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use gsp4kit_core::constants::{
    alternation_weight_sum, c_closed, coefficient_ratio_identity_check, cprime_batch,
    discriminant_constant, norm_constant, pairing_constant, rising_power_sum, siegel_volume,
    Level,
};
use gsp4kit_core::exactnum::{
    pochhammer, pochhammer_identity_check, rat, ratio, rational_pow, rational_valuation,
    zeta_even_over_pi, BigRational, PiQuantity,
};
use gsp4kit_core::ktypes::{
    action_on_tensor9, decompose_tensor_space, pairing_coefficient, projection_onto_31,
    projection_table, standard_w_basis, standard_x_basis, standard_y_vector, Gen, TauModule,
    TauPair,
};
use gsp4kit_core::lattice::{
    dual_index, gram_discriminant, random_dual_index_instance, random_split_instance,
    split_project_duality_check,
};
use gsp4kit_core::liealg::{weyl_construct, AlgebraicWeight, RootVectors};
use gsp4kit_core::linalg::Matrix;
use gsp4kit_core::modforms::eisenstein_congruence_demo;
use num_traits::Zero;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn conclude(name: &str, pass: bool, start: Instant, budget: Option<Duration>) {
    let elapsed = start.elapsed();
    println!("acceptance {name}: {} ({elapsed:.2?})", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "acceptance check `{name}` failed");
    if let Some(b) = budget {
        assert!(elapsed <= b, "`{name}` took {elapsed:?}, over its {b:?} budget");
    }
}

fn apply(m: &Matrix<BigRational>, v: &[BigRational]) -> Vec<BigRational> {
    (0..m.rows)
        .map(|r| (0..m.cols).fold(BigRational::zero(), |acc, c| acc + &m[(r, c)] * &v[c]))
        .collect()
}

#[test]
fn acceptance_01_alternating_sum_equals_closed_form() {
    let start = Instant::now();
    let pairs: Vec<(u32, u32)> =
        (0..=12u32).flat_map(|k| (0..=k).map(move |kp| (k, kp))).collect();
    assert_eq!(pairs.len(), 91);
    let values = cprime_batch(&pairs);
    let pass =
        pairs.iter().zip(&values).all(|(&(k, kp), v)| *v == c_closed(k, kp));
    conclude(
        "01 alternating sum equals closed form on 91 weight pairs",
        pass,
        start,
        Some(Duration::from_secs(10)),
    );
}

#[test]
fn acceptance_02_projection_matrix_matches_fixed_table() {
    let start = Instant::now();
    let rv = RootVectors::build(&rat(1));
    let computed = projection_onto_31(&rv);
    let table = projection_table();
    let pass = (0..9).all(|r| (0..9).all(|c| computed[(r, c)] == table[(r, c)]));
    conclude(
        "02 projection matrix matches its 81-entry table",
        pass,
        start,
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn acceptance_03_decomposition_reproduces_standard_bases() {
    let start = Instant::now();
    let rv = RootVectors::build(&rat(1));
    let summands = decompose_tensor_space(&rv);
    let mut pass = summands.len() == 3;

    // Length-5 string is pinned exactly.
    pass &= summands[0].string == standard_w_basis();

    // The other two only up to one overall scalar each.
    let up_to_scalar = |got: &[Vec<BigRational>], want: &[Vec<BigRational>]| -> bool {
        if got.len() != want.len() {
            return false;
        }
        let lead = want[0].iter().position(|x| !x.is_zero()).unwrap();
        let c = &got[0][lead] / &want[0][lead];
        !c.is_zero()
            && got.iter().zip(want).all(|(g, w)| {
                g.iter().zip(w).all(|(gx, wx)| *gx == &c * wx)
            })
    };
    pass &= up_to_scalar(&summands[1].string, &standard_x_basis());
    pass &= up_to_scalar(&summands[2].string, std::slice::from_ref(&standard_y_vector()));

    // String relations on the d = 4 summand: R v_s = (s+1) v_{s+1} and
    // L v_s = (d−s+1) v_{s−1}.
    let raise = action_on_tensor9(&rv.x1m1, &rv).unwrap();
    let lower = action_on_tensor9(&rv.xm11, &rv).unwrap();
    let w = &summands[0].string;
    for s in 0..=4usize {
        let up = apply(&raise, &w[s]);
        let expected_up: Vec<BigRational> = if s < 4 {
            w[s + 1].iter().map(|x| x * rat(s as i64 + 1)).collect()
        } else {
            vec![BigRational::zero(); 9]
        };
        pass &= up == expected_up;

        let down = apply(&lower, &w[s]);
        let expected_down: Vec<BigRational> = if s > 0 {
            w[s - 1].iter().map(|x| x * rat(4 - s as i64 + 1)).collect()
        } else {
            vec![BigRational::zero(); 9]
        };
        pass &= down == expected_down;
    }

    conclude("03 decomposition reproduces the standard bases", pass, start, None);
}

#[test]
fn acceptance_04_pochhammer_identity_and_collapse_steps() {
    let start = Instant::now();
    let mut pass = true;
    for b in -10..=10i64 {
        for m in 0..=8u32 {
            for l in 0..=m {
                pass &= pochhammer_identity_check(b, l, m);
            }
        }
    }
    // The three collapse steps of the alternating-sum evaluation.
    for m in 0..=8u32 {
        for r in 0..=4u32 {
            for i in 0..=m {
                for u in 0..=r {
                    for up in 0..=r {
                        pass &= coefficient_ratio_identity_check(m, i, u, up, r);
                    }
                }
            }
        }
    }
    pass &= alternation_weight_sum() == ratio(4, 3);
    pass &= (0..=30u32)
        .all(|m| rising_power_sum(m) == pochhammer(i64::from(m) + 1, 5) / rat(5));
    conclude(
        "04 Pochhammer identity and its three collapse steps",
        pass,
        start,
        Some(Duration::from_secs(5)),
    );
}

#[test]
fn acceptance_05_discriminant_equals_pairing_times_norm() {
    let start = Instant::now();
    let mut pass = true;
    for n in [1u64, 2, 3, 5, 6, 7, 10] {
        let level = Level::new(n).unwrap();
        for k in 0..=8u32 {
            for kp in 0..=k {
                let pairing = pairing_constant(k, kp, &level);
                let norm = norm_constant(k, kp, &level);
                let disc = discriminant_constant(k, kp, &level);
                pass &= pairing.clone() * norm.clone() == disc;

                // π-exponents: 3 + (3k + k' + 9) = 3k + k' + 12.
                let e = 3 * i64::from(k) + i64::from(kp);
                pass &= pairing.pi_exp == 3;
                pass &= norm.pi_exp == e + 9;
                pass &= disc.pi_exp == e + 12;
                pass &= pairing.pi_exp + norm.pi_exp == disc.pi_exp;

                // The 3³·5 = 135 carried by the zeta factor of the norm
                // cancels against the 135 dividing the pairing constant.
                let pairing_stripped = pairing.coeff * rat(135);
                let norm_stripped = norm.coeff / rat(135);
                pass &= rat(135) == rational_pow(&rat(3), 3) * rat(5);
                pass &= pairing_stripped * norm_stripped == disc.coeff;
            }
        }
    }
    conclude("05 discriminant constant = pairing × norm", pass, start, None);
}

#[test]
fn acceptance_06_siegel_volume_and_zeta_ratios() {
    let start = Instant::now();
    let mut pass = siegel_volume() == PiQuantity::new(ratio(1, 270), 3);
    pass &= zeta_even_over_pi(2) == ratio(1, 6);
    pass &= zeta_even_over_pi(4) == ratio(1, 90);
    pass &= zeta_even_over_pi(12).numer() == rat(691).numer();
    conclude("06 Siegel volume π³/270 and zeta ratios", pass, start, None);
}

#[test]
fn acceptance_07_dual_index_and_split_duality() {
    let start = Instant::now();
    let mut pass = true;

    for p in [5u64, 7, 691] {
        let mut rng = ChaCha8Rng::seed_from_u64(0xd0a1_1d5c ^ p);
        for trial in 0..50 {
            let n = 2 + trial % 3;
            let (l, b) = random_dual_index_instance(&mut rng, n, p);
            let disc = gram_discriminant(&l, &b).unwrap();
            let index = dual_index(&l, &b).unwrap();
            let v = rational_valuation(p, &disc).unwrap();
            pass &= v >= 0 && index == rational_pow(&rat(p as i64), v);
        }
    }

    let mut count = 0;
    for p in [5u64, 7] {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_d0a1 ^ p);
        for _ in 0..30 {
            let inst = random_split_instance(&mut rng, 4, p, false);
            pass &=
                split_project_duality_check(&inst.lattice, &inst.form, &inst.splitter)
                    == Ok(true);
            count += 1;
        }
        for _ in 0..20 {
            let inst = random_split_instance(&mut rng, 4, p, true);
            pass &=
                split_project_duality_check(&inst.lattice, &inst.form, &inst.splitter)
                    == Ok(true);
            count += 1;
        }
    }
    pass &= count >= 100;

    conclude(
        "07 dual index is the p-part of the discriminant; split duality holds",
        pass,
        start,
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn acceptance_08_delta_eisenstein_congruence_at_691() {
    let start = Instant::now();
    let (prime, checked) = eisenstein_congruence_demo(200);
    let mut pass = prime == 691 && checked == 200;

    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let out = Command::new(env!("CARGO_BIN_EXE_gsp4kit"))
        .arg("congruence")
        .arg(data.join("delta.json"))
        .arg(data.join("e12.json"))
        .args(["--bound", "100", "--format", "json"])
        .output()
        .unwrap();
    pass &= out.status.success();

    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let primes: Vec<u64> = doc["sections"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["rows"].as_array().unwrap())
        .find(|r| r["label"] == "congruence primes")
        .and_then(|r| r["value"].as_array())
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().parse().unwrap())
        .filter(|&p| p > 7)
        .collect();
    pass &= primes == vec![691];

    conclude(
        "08 cusp/Eisenstein congruence detected exactly at 691",
        pass,
        start,
        Some(Duration::from_secs(10)),
    );
}

#[test]
fn acceptance_09_pairing_coefficient_matches_ladder_oracle() {
    let start = Instant::now();
    let pass = (0..=12u32).all(|d| {
        let tau = TauModule::new(TauPair::new(i64::from(d), 0));
        (0..=d).all(|i| {
            let mut v = tau.basis_vector(d as usize);
            for _ in 0..i {
                v = tau.act(Gen::Lower, &v);
            }
            for _ in 0..i {
                v = tau.act(Gen::Raise, &v);
            }
            let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
            pairing_coefficient(d, i) == sign * v[d as usize].clone()
        })
    });
    conclude("09 pairing coefficient matches the ladder oracle", pass, start, None);
}

#[test]
fn acceptance_10_weyl_dimensions_and_contraction_annihilation() {
    let start = Instant::now();
    let cases = [((1, 0, 1), 4usize), ((1, 1, 0), 5), ((2, 0, 2), 10)];
    let pass = cases.iter().all(|&((k, kp, c), dim)| {
        let module = weyl_construct(&AlgebraicWeight::new(k, kp, c));
        module.basis.len() == dim && module.contraction_annihilation_check()
    });
    conclude("10 Weyl modules have dimensions 4, 5, 10", pass, start, None);
}
