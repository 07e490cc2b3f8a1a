//! Numeric verification on explicit state vectors.
//!
//! Everything here is rebuilt from first principles — Pauli letters as
//! matrices, base states from projector chains, basis states by applying
//! word operators — so that nothing is inherited from the GF(2) machinery
//! beyond the operator labels themselves.
//!
//! Qubit order in the state index: Alice qubit i (1-based) is bit i−1,
//! Bob qubit j is bit n+j−1. The gauge sector β sets the computational
//! value of the Alice gauge qubits, bit k of β belonging to gauge qubit
//! k+1.
//!
//! Scalars are generic over [`num_traits::Float`]; the crate root exports
//! f64 aliases. The tolerance constants are calibrated for the f64 lane:
//! every amplitude the projector chain can produce is a small dyadic
//! rational, so residuals of a correct construction sit at rounding level,
//! many orders below these thresholds, while genuine violations appear at
//! order one.

use num_complex::Complex;
use num_traits::Float;

use crate::bits::BitWord;
use crate::builder::EaocwsCode;
use crate::error::{Error, Result};
use crate::group::GaugeGroup;
use crate::induce::enumerate_alice_errors;
use crate::pauli::PauliOp;
use crate::verify::{unix_timestamp, CrossReport, Verdict, VerifyRun, Witness};

/// Allowed deviation of a projected state from a generator's +1 eigenspace.
pub const EIGENSTATE_TOL: f64 = 1e-10;
/// Allowed block residual in the operator-algebra conditions.
pub const OQEC_TOL: f64 = 1e-9;
/// Smallest squared norm accepted from the projector chain; anything below
/// means a generator annihilated the state.
pub const NORM_TOL: f64 = 1e-12;
/// Allowed deviation of the basis Gram matrix from the identity.
pub const GRAM_TOL: f64 = 1e-10;

/// Default limit on n + c for dense construction (2^14 amplitudes).
pub const DEFAULT_QUBIT_CAP: usize = 14;
/// Environment variable overriding [`DEFAULT_QUBIT_CAP`].
pub const QUBIT_CAP_ENV: &str = "EAOCWS_DENSE_CAP";

pub fn qubit_cap() -> usize {
    std::env::var(QUBIT_CAP_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_QUBIT_CAP)
}

fn ensure_cap(qubits: usize) -> Result<()> {
    let cap = qubit_cap();
    if qubits > cap {
        return Err(Error::DenseTooLarge { qubits, cap, env: QUBIT_CAP_ENV });
    }
    Ok(())
}

fn t_from<T: Float>(x: f64) -> T {
    T::from(x).expect("tolerance representable in scalar type")
}

/// A pure state of `qubits` qubits as 2^qubits complex amplitudes.
#[derive(Clone, Debug)]
pub struct DenseState<T: Float> {
    qubits: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Float> DenseState<T> {
    /// The computational basis state |index⟩.
    pub fn computational(qubits: usize, index: usize) -> Self {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); 1 << qubits];
        amps[index] = Complex::new(T::one(), T::zero());
        DenseState { qubits, amps }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        assert_eq!(self.qubits, other.qubits);
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * *b)
    }

    pub fn norm_sq(&self) -> T {
        self.amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    fn scale(&mut self, factor: T) {
        for a in &mut self.amps {
            *a = *a * factor;
        }
    }

    /// Applies a Pauli operator: each letter acts on its own qubit, with
    /// Y = iXZ fixing the phase convention. The matrix is Hermitian and
    /// unitary, so repeated application is the identity.
    pub fn apply(&self, op: &PauliOp) -> Self {
        let n = op.n();
        assert_eq!(self.qubits, n + op.c(), "operator register does not match the state");
        let xmask = (op.x_alice().raw() as usize) | (op.x_bob().raw() as usize) << n;
        let zmask = (op.z_alice().raw() as usize) | (op.z_bob().raw() as usize) << n;
        let y_count =
            (op.x_alice().and(op.z_alice()).weight() + op.x_bob().and(op.z_bob()).weight()) % 4;
        let i_phase = match y_count {
            0 => Complex::new(T::one(), T::zero()),
            1 => Complex::new(T::zero(), T::one()),
            2 => Complex::new(-T::one(), T::zero()),
            _ => Complex::new(T::zero(), -T::one()),
        };
        let mut amps = vec![Complex::new(T::zero(), T::zero()); self.amps.len()];
        for (b, amp) in self.amps.iter().enumerate() {
            if amp.re.is_zero() && amp.im.is_zero() {
                continue;
            }
            let sign = if (b & zmask).count_ones().is_multiple_of(2) { T::one() } else { -T::one() };
            amps[b ^ xmask] = *amp * i_phase * sign;
        }
        DenseState { qubits: self.qubits, amps }
    }

    /// ‖self − other‖.
    pub fn distance(&self, other: &Self) -> T {
        assert_eq!(self.qubits, other.qubits);
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(T::zero(), |acc, (a, b)| acc + (*a - *b).norm_sqr())
            .sqrt()
    }
}

/// Builds the shared base state of one gauge sector: ancilla and ebit
/// qubits (and Bob) start at |0⟩, the gauge qubits at |β⟩, and the chain of
/// stabilizer projectors (I+S)/2 is applied, followed by the gauge-Z
/// projectors with the sector's signs. The result is renormalized and
/// checked to be a genuine +1 (resp. signed) eigenstate of every generator.
pub fn dense_base_state<T: Float>(group: &GaugeGroup, sector: &BitWord) -> Result<DenseState<T>> {
    let layout = group.layout();
    let (n, c, s, r) = (layout.n(), layout.c(), layout.s(), layout.r());
    let qubits = n + c;
    ensure_cap(qubits)?;
    if sector.len() != r {
        return Err(Error::LengthMismatch { side: "gauge", expected: r, got: sector.len() });
    }

    let mut index = 0usize;
    for k in sector.ones() {
        index |= 1 << (s + c + k);
    }
    let mut psi = DenseState::computational(qubits, index);

    let project = |psi: &DenseState<T>, op: &PauliOp, sign: T| {
        let mut applied = psi.apply(op);
        applied.scale(sign);
        let mut out = psi.clone();
        for (o, a) in out.amps.iter_mut().zip(&applied.amps) {
            *o = (*o + *a) * t_from::<T>(0.5);
        }
        out
    };

    for op in group.state_stabilizers() {
        psi = project(&psi, &op, T::one());
    }
    let mut sector_signs = Vec::with_capacity(r);
    for k in 0..r {
        let sign = if sector.get(k) { -T::one() } else { T::one() };
        sector_signs.push(sign);
        psi = project(&psi, group.gauge_z(k + 1), sign);
    }

    let norm_sq = psi.norm_sq();
    if norm_sq < t_from(NORM_TOL) {
        return Err(Error::ProjectorAnnihilated(format!("sector {sector}")));
    }
    psi.scale(norm_sq.sqrt().recip());

    let eigen_tol = t_from::<T>(EIGENSTATE_TOL);
    for (idx, (label, op)) in group.generators().into_iter().enumerate() {
        // Generator order is s_1..s_n, h_1..h_c, g_1..g_r. The trailing r
        // s-generators are the gauge-X operators: they move between
        // sectors instead of stabilizing one, so they are skipped here.
        if idx >= n - r && idx < n {
            continue;
        }
        let expected_sign =
            if idx >= n + c { sector_signs[idx - (n + c)] } else { T::one() };
        let mut image = psi.apply(&op);
        image.scale(expected_sign);
        if psi.distance(&image) > eigen_tol {
            return Err(Error::DenseInvariant(format!(
                "base state of sector {sector} is not a {}-eigenstate of {label}",
                if expected_sign > T::zero() { "+1" } else { "-1" },
            )));
        }
    }
    Ok(psi)
}

/// All K·2^r basis states `W_i |B_β⟩`, codeword-major (sector β ascending
/// within codeword i), Gram-checked to be orthonormal.
pub fn dense_basis<T: Float>(code: &EaocwsCode) -> Result<Vec<DenseState<T>>> {
    let layout = code.layout();
    ensure_cap(layout.n() + layout.c())?;
    let group = code.group();
    let r = layout.r();
    let sectors: Vec<DenseState<T>> = (0..1usize << r)
        .map(|beta| dense_base_state(group, &BitWord::from_raw(beta as u64, r)))
        .collect::<Result<_>>()?;
    let word_ops = code.word_operators()?;
    let mut basis = Vec::with_capacity(word_ops.len() << r);
    for op in &word_ops {
        for base in &sectors {
            basis.push(base.apply(op));
        }
    }

    let mut max_dev = T::zero();
    for (u, a) in basis.iter().enumerate() {
        for (v, b) in basis.iter().enumerate() {
            let want = if u == v { T::one() } else { T::zero() };
            let dev = (a.inner(b) - Complex::new(want, T::zero())).norm();
            if dev > max_dev {
                max_dev = dev;
            }
        }
    }
    if max_dev > t_from(GRAM_TOL) {
        return Err(Error::NonOrthonormalBasis(max_dev.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(basis)
}

/// Outcome of a dense block check.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseCheck {
    pub verdict: Verdict,
    pub max_residual: f64,
    pub witness: Option<Witness>,
    pub pairs_checked: usize,
}

/// Residual of the block conditions for the matrix M
/// `M[(i,β),(j,β')] = ⟨left (i,β)| right (j,β')⟩`: the largest off-diagonal
/// logical block entry, or the largest spread between two diagonal gauge
/// blocks, whichever is worse.
fn block_residual<T: Float>(
    left: &[DenseState<T>],
    right: &[DenseState<T>],
    dimension: usize,
    sectors: usize,
) -> T {
    let m: Vec<Vec<Complex<T>>> =
        left.iter().map(|a| right.iter().map(|b| a.inner(b)).collect()).collect();
    let mut worst = T::zero();
    for i in 0..dimension {
        for j in 0..dimension {
            for beta in 0..sectors {
                for beta2 in 0..sectors {
                    let entry = m[i * sectors + beta][j * sectors + beta2];
                    if i != j {
                        let dev = entry.norm();
                        if dev > worst {
                            worst = dev;
                        }
                    } else {
                        // Compare this diagonal block entry against the
                        // same entry of every other diagonal block.
                        for i2 in (i + 1)..dimension {
                            let other = m[i2 * sectors + beta][i2 * sectors + beta2];
                            let dev = (entry - other).norm();
                            if dev > worst {
                                worst = dev;
                            }
                        }
                    }
                }
            }
        }
    }
    worst
}

/// Checks that every product E_a·E_b of listed errors (a ≤ b) preserves the
/// logical/gauge block structure: off-diagonal logical blocks vanish and
/// the diagonal gauge blocks are independent of the logical index. Include
/// the identity in `errors` to cover the single errors themselves.
pub fn dense_oqec_check<T: Float>(
    code: &EaocwsCode,
    errors: &[PauliOp],
    tol: T,
) -> Result<DenseCheck> {
    let basis = dense_basis::<T>(code)?;
    let dimension = code.dimension();
    let sectors = 1usize << code.layout().r();
    let transformed: Vec<Vec<DenseState<T>>> =
        errors.iter().map(|e| basis.iter().map(|b| b.apply(e)).collect()).collect();

    let mut max_residual = T::zero();
    let mut witness = None;
    let mut pairs_checked = 0;
    for a in 0..errors.len() {
        for b in a..errors.len() {
            pairs_checked += 1;
            let residual = block_residual(&transformed[a], &transformed[b], dimension, sectors);
            if residual > max_residual {
                max_residual = residual;
            }
            if witness.is_none() && residual > tol {
                witness = Some(Witness::Dense {
                    left_error: errors[a].to_text(),
                    right_error: errors[b].to_text(),
                    residual: residual.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
    }
    Ok(DenseCheck {
        verdict: if witness.is_none() { Verdict::Pass } else { Verdict::Fail },
        max_residual: max_residual.to_f64().unwrap_or(f64::NAN),
        witness,
        pairs_checked,
    })
}

/// Checks each listed error on its own (pairing it with the identity):
/// the detection conditions.
pub fn dense_detect_check<T: Float>(
    code: &EaocwsCode,
    errors: &[PauliOp],
    tol: T,
) -> Result<DenseCheck> {
    let basis = dense_basis::<T>(code)?;
    let dimension = code.dimension();
    let sectors = 1usize << code.layout().r();
    let identity_text = PauliOp::identity(code.layout().n(), code.layout().c()).to_text();

    let mut max_residual = T::zero();
    let mut witness = None;
    for error in errors {
        let transformed: Vec<DenseState<T>> = basis.iter().map(|b| b.apply(error)).collect();
        let residual = block_residual(&basis, &transformed, dimension, sectors);
        if residual > max_residual {
            max_residual = residual;
        }
        if witness.is_none() && residual > tol {
            witness = Some(Witness::Dense {
                left_error: identity_text.clone(),
                right_error: error.to_text(),
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(DenseCheck {
        verdict: if witness.is_none() { Verdict::Pass } else { Verdict::Fail },
        max_residual: max_residual.to_f64().unwrap_or(f64::NAN),
        witness,
        pairs_checked: errors.len(),
    })
}

/// Full numeric distance check in f64: every Alice error of weight
/// < `distance` must pass the detection block conditions.
pub fn dense_verify(code: &EaocwsCode, distance: usize) -> Result<VerifyRun> {
    let start = std::time::Instant::now();
    let errors = enumerate_alice_errors(code.layout(), distance.saturating_sub(1));
    let check = dense_detect_check::<f64>(code, &errors, OQEC_TOL)?;
    Ok(VerifyRun {
        method: "dense".to_string(),
        claimed_distance: distance,
        verdict: check.verdict,
        witness: check.witness,
        max_residual: Some(check.max_residual),
        checked_errors: errors.len(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        timestamp: unix_timestamp(),
    })
}

/// Runs both verification routes over identical error sets — singles for
/// detection at the claimed distance, pair products for correction at the
/// implied radius — and reports the four verdicts side by side.
pub fn cross_validate(code: &EaocwsCode, distance: usize) -> Result<CrossReport> {
    use crate::verify::symplectic::{check_error_pairs, check_errors};

    let layout = code.layout();
    let detect_errors = enumerate_alice_errors(layout, distance.saturating_sub(1));
    let (_, symp_detect) = check_errors(code, &detect_errors)?;
    let dense_detect = dense_detect_check::<f64>(code, &detect_errors, OQEC_TOL)?;

    let t = distance.saturating_sub(1) / 2;
    let mut correct_errors = vec![PauliOp::identity(layout.n(), layout.c())];
    correct_errors.extend(enumerate_alice_errors(layout, t));
    let (_, symp_correct) = check_error_pairs(code, &correct_errors)?;
    let dense_correct = dense_oqec_check::<f64>(code, &correct_errors, OQEC_TOL)?;

    let m = correct_errors.len();
    let verdict = |witness_absent: bool| if witness_absent { Verdict::Pass } else { Verdict::Fail };
    Ok(CrossReport {
        detection_symplectic: verdict(symp_detect.is_none()),
        detection_dense: dense_detect.verdict,
        correction_symplectic: verdict(symp_correct.is_none()),
        correction_dense: dense_correct.verdict,
        detection_errors: detect_errors.len(),
        correction_pairs: m * (m + 1) / 2,
    })
}
