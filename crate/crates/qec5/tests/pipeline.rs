//! Cross-module properties of the full encode / gate / error / decode /
//! correct pipeline.

use qec5::code::EncoderFrame;
use qec5::experiment::{run_experiment, TomographyOptions};
use qec5::noise::NoiseSchedule;
use qec5::operator::embed;
use qec5::recovery::{syndrome_populations, Pipeline};
use qec5::state::StateVector;
use qec5::tomography::{
    chi_from_responses, ideal_chi, measure_responses, measure_responses_from_states,
    process_fidelity,
};
use qec5::{ErrorCondition, LogicalGate, Pauli, Qubit};

fn probe_states() -> [StateVector; 6] {
    [
        StateVector::ket0(),
        StateVector::ket1(),
        StateVector::plus(),
        StateVector::minus(),
        StateVector::plus_i(),
        StateVector::minus_i(),
    ]
}

/// Products of random unitaries stay unitary.
#[test]
fn random_unitary_products_stay_unitary() {
    use qec5::linalg::CMatrix;
    use qec5::Complex64;
    use rand::{Rng, SeedableRng};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let random_u2 = |rng: &mut rand_chacha::ChaCha8Rng| {
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::FRAC_PI_2);
        let (phi, lam): (f64, f64) = (
            rng.gen_range(0.0..std::f64::consts::TAU),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let (c, s) = (theta.cos(), theta.sin());
        CMatrix::from_rows(&[
            &[Complex64::new(c, 0.0), -Complex64::from_polar(s, lam)],
            &[
                Complex64::from_polar(s, phi),
                Complex64::from_polar(c, phi + lam),
            ],
        ])
    };
    for _ in 0..20 {
        // random 32x32 unitaries as products of random single-qubit embeds
        let mut u = qec5::operator::identity32();
        let mut v = qec5::operator::identity32();
        for _ in 0..4 {
            let uq = Qubit::new(rng.gen_range(1..=5)).unwrap();
            let vq = Qubit::new(rng.gen_range(1..=5)).unwrap();
            let m2 = random_u2(&mut rng);
            let n2 = random_u2(&mut rng);
            u = embed(&m2, uq).unwrap().mul(&u).unwrap();
            v = embed(&n2, vq).unwrap().mul(&v).unwrap();
        }
        let product = u.mul(&v).unwrap();
        assert!(product.mat().is_unitary(1e-10));
    }
}

/// Every single-qubit error is corrected perfectly for every gate and
/// every probe input: the defining claim of the code.
#[test]
fn perfect_correction_over_all_gates_errors_and_inputs() {
    let pipeline = Pipeline::with_default_frame().unwrap();
    for gate in LogicalGate::ALL {
        let ideal_gate = gate.ideal_action();
        for error in ErrorCondition::all() {
            for psi in probe_states() {
                let out = pipeline.run(gate, error, &psi.to_density(), None).unwrap();
                let ideal_amps = ideal_gate.mul_vec(psi.amps());
                let ideal = StateVector::new(ideal_amps).unwrap();
                let fidelity = out.overlap(&ideal);
                assert!(
                    fidelity >= 1.0 - 1e-9,
                    "gate {gate}, error {error}: state fidelity {fidelity}"
                );
            }
        }
    }
}

/// After decoding, the syndrome register holds the pure basis state
/// assigned to the injected error, independent of the input state.
#[test]
fn syndrome_is_input_independent() {
    let pipeline = Pipeline::with_default_frame().unwrap();
    for gate in LogicalGate::ALL {
        for error in ErrorCondition::all() {
            let expected = pipeline.table().by_condition(error).unwrap().syndrome;
            for psi in [
                StateVector::ket0(),
                StateVector::ket1(),
                StateVector::plus(),
                StateVector::plus_i(),
            ] {
                let decoded = pipeline.decoded_state(gate, error, &psi).unwrap();
                let pops = syndrome_populations(&decoded);
                assert!(
                    (pops[expected as usize] - 1.0).abs() < 1e-9,
                    "gate {gate}, error {error}: population {}",
                    pops[expected as usize]
                );
            }
        }
    }
}

/// Negative control: simultaneous errors on two different qubits are beyond
/// the code's correction capability. Every such pair leaves an uncorrected
/// logical fault; none reaches fidelity 1 − 1e-3, and in particular a pair
/// violating the perfect-correction bound exists.
#[test]
fn two_qubit_errors_are_not_corrected() {
    let pipeline = Pipeline::with_default_frame().unwrap();
    let paulis = [Pauli::X, Pauli::Y, Pauli::Z];
    let chi_id = ideal_chi(LogicalGate::Identity);
    let mut worst: f64 = 0.0;
    for q1 in 1..=5u8 {
        for q2 in (q1 + 1)..=5u8 {
            for pa in paulis {
                for pb in paulis {
                    let e1 = embed(&pa.matrix(), Qubit::new(q1).unwrap()).unwrap();
                    let e2 = embed(&pb.matrix(), Qubit::new(q2).unwrap()).unwrap();
                    let op = e1.mul(&e2).unwrap();
                    let compiled = pipeline.compile(LogicalGate::Identity, &op, None).unwrap();
                    let responses = measure_responses(|rho| compiled.apply(rho), true).unwrap();
                    let chi = chi_from_responses(&responses).unwrap();
                    let f = process_fidelity(&chi, &chi_id).unwrap();
                    assert!(
                        f < 1.0 - 1e-3,
                        "pair ({q1},{q2}) {}{} unexpectedly corrected: F = {f}",
                        pa.label(),
                        pb.label()
                    );
                    worst = worst.max(f);
                }
            }
        }
    }
    // with the default frame every pair in fact scores zero
    assert!(worst < 1e-9, "worst two-qubit fidelity {worst}");
}

/// Operator-input and state-input tomography agree on noiseless pipelines.
#[test]
fn operator_and_state_tomography_agree() {
    let pipeline = Pipeline::with_default_frame().unwrap();
    for gate in LogicalGate::ALL {
        for error in [
            ErrorCondition::Identity,
            ErrorCondition::from_label("B2").unwrap(),
            ErrorCondition::from_label("BS5").unwrap(),
        ] {
            let compiled = pipeline.compile(gate, &error.unitary(), None).unwrap();
            let op_resp = measure_responses(|rho| compiled.apply(rho), true).unwrap();
            let st_resp = measure_responses_from_states(|rho| compiled.apply(rho)).unwrap();
            let chi_op = chi_from_responses(&op_resp).unwrap();
            let chi_st = chi_from_responses(&st_resp).unwrap();
            assert!(
                chi_op.max_abs_diff(&chi_st) < 1e-9,
                "gate {gate}, error {error}"
            );
        }
    }
}

/// The derived table adapts to whatever valid frame the encoder was built
/// with; correction stays perfect under a scrambled frame.
#[test]
fn scrambled_frame_still_corrects() {
    let rows: Vec<(ErrorCondition, u8, Pauli)> = ErrorCondition::all()
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            if i == 0 {
                (c, 0, Pauli::I)
            } else {
                (c, (16 - i) as u8, [Pauli::Z, Pauli::X, Pauli::Y][i % 3])
            }
        })
        .collect();
    let frame = EncoderFrame::new(&rows).unwrap();
    let pipeline = Pipeline::new(&frame).unwrap();
    assert_eq!(pipeline.table().entries().len(), 16);
    for (gate, error_label) in [
        (LogicalGate::Identity, "S1"),
        (LogicalGate::Not, "B4"),
        (LogicalGate::Hadamard, "BS2"),
    ] {
        let error = ErrorCondition::from_label(error_label).unwrap();
        let out =
            run_experiment(&pipeline, gate, error, None, TomographyOptions::default()).unwrap();
        assert!(
            (out.fidelity - 1.0).abs() < 1e-9,
            "gate {gate}, error {error_label}: F = {}",
            out.fidelity
        );
    }
}

/// Under uniform dephasing the identity-gate, no-error pipeline fidelity is
/// non-increasing on a coarse probability grid.
#[test]
fn dephasing_fidelity_is_monotone() {
    let pipeline = Pipeline::with_default_frame().unwrap();
    let mut prev = f64::INFINITY;
    for step in 0..=25 {
        let p = f64::from(step) * 0.01;
        let noise = NoiseSchedule::uniform_dephasing(p);
        let out = run_experiment(
            &pipeline,
            LogicalGate::Identity,
            ErrorCondition::Identity,
            Some(&noise),
            TomographyOptions::default(),
        )
        .unwrap();
        assert!(
            out.fidelity <= prev + 1e-12,
            "fidelity increased at p = {p}: {} > {prev}",
            out.fidelity
        );
        // the reconstructed process matrix of a physical channel is Hermitian
        assert!(out.chi_effective.is_hermitian(1e-9));
        prev = out.fidelity;
    }
    assert!(prev < 0.75, "grid endpoint unexpectedly high: {prev}");
}
