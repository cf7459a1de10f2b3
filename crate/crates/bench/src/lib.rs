//! Parameter sets shared by the benchmarks.

use hurwitz_asym::{suggest_eta, AsymParams, SPoint};

/// Shift used by every large-t case.
pub const X: f64 = 1.3;

/// `(s, params)` at height `t` with η the admissible value nearest 2500·(t/10⁶)^{1/2}.
pub fn large_t_case(t: f64, n: usize) -> (SPoint, AsymParams) {
    let eps = 1e-3;
    let target = 2500.0 * (t / 1e6).sqrt();
    let eta = suggest_eta(X, t, target, eps).expect("admissible eta near the target");
    (
        SPoint::new(0.5, t).expect("valid point"),
        AsymParams::new(X, eta, eps, n),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use hurwitz_asym::check_eta;

    #[test]
    fn cases_are_admissible() {
        for t in [1e4, 1e5, 1e6] {
            let (s, p) = large_t_case(t, 2);
            assert!(check_eta(X, s.t, p.eta, p.eps).admissible);
        }
    }
}
