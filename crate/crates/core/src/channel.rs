//! Per-TTI channel realizations: distance pathloss, Rayleigh small-scale
//! fading and the reflected AP→surface→device cascade.
//!
//! Small-scale coefficients are circularly-symmetric complex Gaussians with
//! zero mean and unit variance, so each link's power gain `|h|²` is
//! exponential with unit mean. The surface applies one common phase to every
//! element unless a per-element profile is configured; with i.i.d. draws the
//! reflected term therefore adds power incoherently and the mean gain grows
//! linearly in the element count.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::ModelError;
use crate::model::{ChannelParams, IrsPanel, LinkDistances};

/// Linear power gain `(d / d_ref)^(-α)`.
///
/// Distances inside the reference distance are clamped to a gain of 1.
pub fn pathloss_gain(distance: f64, exponent: f64, reference_distance: f64) -> f64 {
    if distance < reference_distance {
        log::warn!(
            "distance {distance} m is inside the reference distance {reference_distance} m; clamping pathloss gain to 1"
        );
        return 1.0;
    }
    (distance / reference_distance).powf(-exponent)
}

/// One zero-mean, unit-variance complex Gaussian coefficient.
pub fn draw_small_scale<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Small-scale coefficients for one slot.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ChannelRealization {
    pub direct: Complex64,
    /// `(g_n, f_n)`: AP→element n and element n→device.
    pub cascade: Vec<(Complex64, Complex64)>,
}

impl ChannelRealization {
    /// Draw a fresh realization. Each link family reads from its own stream so
    /// that scenarios with different element counts share the direct draw and
    /// the first elements' draws.
    pub fn draw<R: Rng + ?Sized>(
        direct: &mut R,
        ap_irs: &mut R,
        irs_device: &mut R,
        elements: usize,
        freeze_ap_irs: bool,
    ) -> Self {
        let mut r = ChannelRealization::default();
        r.redraw(direct, ap_irs, irs_device, elements, freeze_ap_irs);
        r
    }

    /// Like [`ChannelRealization::draw`] but reuses the cascade buffer.
    pub fn redraw<R: Rng + ?Sized>(
        &mut self,
        direct: &mut R,
        ap_irs: &mut R,
        irs_device: &mut R,
        elements: usize,
        freeze_ap_irs: bool,
    ) {
        self.direct = draw_small_scale(direct);
        self.cascade.clear();
        self.cascade.extend((0..elements).map(|_| {
            let g = draw_small_scale(ap_irs);
            let f = draw_small_scale(irs_device);
            (if freeze_ap_irs { Complex64::new(1.0, 0.0) } else { g }, f)
        }));
    }
}

/// Pathloss gains of the three links.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    pub direct: f64,
    pub ap_irs: f64,
    pub irs_device: f64,
}

impl LinkBudget {
    pub fn new(d: &LinkDistances, params: &ChannelParams) -> Self {
        let d_ref = params.reference_distance_m;
        LinkBudget {
            direct: pathloss_gain(d.ap_device, params.alpha_nlos, d_ref),
            ap_irs: pathloss_gain(d.ap_irs, params.alpha_los, d_ref),
            irs_device: pathloss_gain(d.irs_device, params.alpha_nlos, d_ref),
        }
    }

    /// Expected effective gain over i.i.d. draws: `PL_d + N·β²·PL_o·PL_r`.
    pub fn mean_gain(&self, elements: usize, amplitude: f64) -> f64 {
        self.direct + elements as f64 * amplitude * amplitude * self.ap_irs * self.irs_device
    }
}

/// Power gain of the composite channel,
/// `|√PL_d·h_d + β·√(PL_o·PL_r)·Σ e^{iΦ_n}·g_n·f_n|²`.
pub fn effective_channel(
    realization: &ChannelRealization,
    irs: &IrsPanel,
    budget: &LinkBudget,
) -> Result<f64, ModelError> {
    if realization.cascade.len() != irs.element_count {
        return Err(ModelError::ElementCountMismatch {
            expected: irs.element_count,
            actual: realization.cascade.len(),
        });
    }
    if irs.element_count == 0 || irs.amplitude == 0.0 {
        return Ok(direct_gain(realization, budget));
    }
    let direct = realization.direct * budget.direct.sqrt();
    let reflected = match &irs.phase_profile_rad {
        None => {
            let sum: Complex64 = realization.cascade.iter().map(|(g, f)| g * f).sum();
            sum * Complex64::from_polar(1.0, irs.phase_shift_rad)
        }
        Some(phases) => realization
            .cascade
            .iter()
            .zip(phases)
            .map(|((g, f), phi)| g * f * Complex64::from_polar(1.0, *phi))
            .sum(),
    };
    let scale = irs.amplitude * (budget.ap_irs * budget.irs_device).sqrt();
    Ok((direct + reflected * scale).norm_sqr())
}

/// Gain of the direct link alone, for scenarios without the surface.
pub fn direct_gain(realization: &ChannelRealization, budget: &LinkBudget) -> f64 {
    budget.direct * realization.direct.norm_sqr()
}

/// `P_rx = P_t · gain`.
pub fn received_power(tx_power: f64, gain: f64) -> f64 {
    tx_power * gain
}

/// Shannon rate `B·log2(1 + P·g/N0)` in bits per second.
pub fn uplink_rate(tx_power: f64, gain: f64, bandwidth: f64, noise_power: f64) -> f64 {
    bandwidth * (tx_power * gain / noise_power).ln_1p() / std::f64::consts::LN_2
}
