//! Wynn's epsilon algorithm for accelerating slowly convergent (typically
//! alternating) sequences of partial sums.

/// Extrapolated limit of `partial_sums`.
///
/// Builds the full epsilon table and returns the highest-order even-column
/// entry. Returns the last partial sum when fewer than three terms exist or
/// when the table degenerates (two equal neighbours mean the sequence has
/// already converged to working precision).
pub fn wynn_epsilon(partial_sums: &[f64]) -> f64 {
    let n = partial_sums.len();
    if n < 3 {
        return partial_sums.last().copied().unwrap_or(0.0);
    }
    // prev = column k-1, cur = column k; column -1 is all zeros.
    let mut prev = vec![0.0; n + 1];
    let mut cur: Vec<f64> = partial_sums.to_vec();
    let mut best = partial_sums[n - 1];
    let mut k = 0usize;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let diff = cur[i + 1] - cur[i];
            if diff == 0.0 || !diff.is_finite() {
                return if k.is_multiple_of(2) { cur[i + 1] } else { best };
            }
            next.push(prev[i + 1] + 1.0 / diff);
        }
        prev = cur;
        cur = next;
        k += 1;
        if k.is_multiple_of(2) {
            let candidate = *cur.last().expect("non-empty column");
            if !candidate.is_finite() {
                break;
            }
            best = candidate;
        }
    }
    best
}
