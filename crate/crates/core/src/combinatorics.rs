//! Integer sequences that show up in the triangulation counts.

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Number of simplices in the canonical triangulation of the full type C
/// root polytope on `n` vertices: `C(2n-1, n)`.
pub fn central_binomial_count(n: u64) -> u128 {
    binomial(2 * n - 1, n)
}

/// Number of noncrossing alternating trees on `[n]` with exactly `k` edges
/// at vertex `n`: `C(2n-k-3, n-k-1) * k / (n-1)`. Returns `None` when the
/// division is not exact or the arguments are out of range.
pub fn trees_with_root_degree(n: u64, k: u64) -> Option<u128> {
    if n < 2 || k == 0 || k > n - 1 {
        return None;
    }
    let num = binomial(2 * n - k - 3, n - k - 1) * k as u128;
    let den = (n - 1) as u128;
    num.is_multiple_of(den).then_some(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(central_binomial_count(4), 35);
        assert_eq!(central_binomial_count(5), 126);
    }

    #[test]
    fn root_degree_counts_for_three_vertices() {
        assert_eq!(trees_with_root_degree(3, 1), Some(1));
        assert_eq!(trees_with_root_degree(3, 2), Some(1));
        assert_eq!(trees_with_root_degree(3, 3), None);
    }
}
