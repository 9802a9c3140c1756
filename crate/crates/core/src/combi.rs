//! Allocation-free enumeration of k-subsets in lexicographic order.

use std::ops::ControlFlow;

/// Calls `f` on every k-subset of `{0, ..., n-1}` in lexicographic order,
/// reusing one index buffer. `f` may break to stop early.
///
/// `k == 0` yields exactly the empty subset; `k > n` yields nothing.
pub fn for_each_combination<F>(n: usize, k: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k > n {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Binomial coefficient with saturation; used for encoding-size caps.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
