//! Binomial coefficients: parity via Lucas' theorem, exact values for
//! cross-checks, and multinomial coefficients for quotient dimensions.

/// Parity of `C(n, k)`. By Lucas' theorem over GF(2), `C(n, k)` is odd
/// exactly when the base-2 digits of `k` are dominated by those of `n`,
/// i.e. `k & (n - k) == 0`. Out-of-range `k` gives an even (zero) value.
pub fn binom_mod2(n: u64, k: i64) -> bool {
    if k < 0 || k as u64 > n {
        return false;
    }
    let k = k as u64;
    k & (n - k) == 0
}

/// Exact binomial coefficient. Intended for small arguments (tests and
/// the brute-force rank oracle); panics on overflow.
pub fn binom_exact(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

/// Multinomial coefficient `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[u64]) -> u64 {
    let mut acc: u128 = 1;
    let mut seen: u64 = 0;
    for &p in parts {
        for i in 1..=p {
            acc = acc
                .checked_mul((seen + i) as u128)
                .expect("multinomial overflow");
            acc /= i as u128;
        }
        seen += p;
    }
    u64::try_from(acc).expect("multinomial overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_matches_exact_binomials() {
        for n in 0..=64u64 {
            for k in 0..=n {
                let exact_odd = binom_exact(n, k) % 2 == 1;
                assert_eq!(binom_mod2(n, k as i64), exact_odd, "C({n},{k})");
            }
        }
    }

    #[test]
    fn out_of_range_is_even() {
        assert!(!binom_mod2(5, -1));
        assert!(!binom_mod2(5, 6));
        assert!(binom_mod2(5, 0));
        assert!(binom_mod2(5, 5));
    }

    #[test]
    fn known_parities() {
        // C(5,2) = 10 and C(20,2) = 190 are even; C(21,5) is odd.
        assert!(!binom_mod2(5, 2));
        assert!(!binom_mod2(20, 2));
        assert!(binom_mod2(21, 5));
        assert!(binom_mod2(4845, 0));
        // C(20,4) = 4845 is odd.
        assert!(binom_mod2(20, 4));
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[]), 1);
        assert_eq!(multinomial(&[3]), 1);
        assert_eq!(multinomial(&[1, 1, 2]), 12);
        assert_eq!(multinomial(&[1, 2]), 3);
        assert_eq!(multinomial(&[2, 2]), 6);
    }
}
