use super::Matrix;
use crate::error::Result;
use crate::semifield::{MaxPlusFloat, MaxTimesFloat, Semifield};

/// Float carriers whose `⊗` becomes `+` on a logarithmic weight.
pub trait LogWeight: Semifield + Copy {
    /// `None` for the semifield zero (no edge).
    fn log_weight(&self) -> Option<f64>;
    fn from_log_weight(weight: f64) -> Self;
}

impl LogWeight for MaxTimesFloat {
    fn log_weight(&self) -> Option<f64> {
        (self.0 > 0.0).then(|| self.0.ln())
    }

    fn from_log_weight(weight: f64) -> Self {
        MaxTimesFloat(weight.exp())
    }
}

impl LogWeight for MaxPlusFloat {
    fn log_weight(&self) -> Option<f64> {
        (!self.is_zero()).then_some(self.0)
    }

    fn from_log_weight(weight: f64) -> Self {
        MaxPlusFloat(weight)
    }
}

/// Karp's maximum cycle mean on a dense weight table (`None` = no edge).
/// Returns `None` for acyclic graphs.
pub fn max_cycle_mean(weights: &[Vec<Option<f64>>]) -> Option<f64> {
    let n = weights.len();
    // walks[k][v]: heaviest walk with exactly k edges ending at v, from any start
    let mut walks = vec![vec![None::<f64>; n]; n + 1];
    walks[0] = vec![Some(0.0); n];
    for k in 1..=n {
        for v in 0..n {
            walks[k][v] = (0..n)
                .filter_map(|u| Some(walks[k - 1][u]? + weights[u][v]?))
                .reduce(f64::max);
        }
    }
    (0..n)
        .filter_map(|v| {
            let full = walks[n][v]?;
            (0..n)
                .filter_map(|k| Some((full - walks[k][v]?) / (n - k) as f64))
                .reduce(f64::min)
        })
        .reduce(f64::max)
}

impl<S: LogWeight> Matrix<S> {
    /// Spectral radius by Karp's O(n³) dynamic program, for large float matrices.
    pub fn spectral_radius_karp(&self) -> Result<S> {
        let n = self.square_order()?;
        let weights: Vec<Vec<Option<f64>>> = (0..n)
            .map(|i| self.row(i).iter().map(LogWeight::log_weight).collect())
            .collect();
        Ok(max_cycle_mean(&weights).map_or_else(S::zero, S::from_log_weight))
    }
}
