//! Sines and cosines of rational multiples of π with exact argument
//! reduction, so that nodes such as `sin(π ζ)` and `cos(π/2)` come out as
//! exact zeros and mirror pairs are bit-for-bit negatives of each other.

use core::f64::consts::PI;

/// `sin(π p / q)` for `q > 0`.
pub(crate) fn sin_pi_frac(p: i64, q: u64) -> f64 {
    debug_assert!(q > 0);
    let q = q as i64;
    let period = 2 * q;
    let mut r = p.rem_euclid(period);
    let mut sign = 1.0;
    if r >= q {
        r -= q;
        sign = -1.0;
    }
    // r in [0, q): fold onto [0, q/2] using sin(π - x) = sin(x)
    if 2 * r > q {
        r = q - r;
    }
    if r == 0 {
        return 0.0;
    }
    if 2 * r == q {
        return sign;
    }
    sign * libm::sin(PI * r as f64 / q as f64)
}

/// `cos(π p / q)` for `q > 0`.
pub(crate) fn cos_pi_frac(p: i64, q: u64) -> f64 {
    // cos(πp/q) = sin(π(q - 2p) / 2q)
    sin_pi_frac(q as i64 - 2 * p, 2 * q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_exact() {
        for q in 1..40u64 {
            for k in -3..4i64 {
                assert_eq!(sin_pi_frac(k * q as i64, q), 0.0);
            }
        }
        assert_eq!(cos_pi_frac(26, 52), 0.0);
        assert_eq!(cos_pi_frac(0, 7), 1.0);
        assert_eq!(cos_pi_frac(7, 7), -1.0);
    }

    #[test]
    fn matches_libm() {
        for q in 1..30u64 {
            for p in -70..70i64 {
                let x = PI * p as f64 / q as f64;
                // libm itself is only accurate to ~ε·|x| here
                let tol = 1e-15 * (1.0 + x.abs());
                assert!((sin_pi_frac(p, q) - libm::sin(x)).abs() < tol);
                assert!((cos_pi_frac(p, q) - libm::cos(x)).abs() < tol);
            }
        }
    }

    #[test]
    fn mirror_pairs_are_exact_negatives() {
        let q = 52;
        for z in 1..52i64 {
            assert_eq!(cos_pi_frac(z, q), -cos_pi_frac(q as i64 - z, q));
        }
    }
}
