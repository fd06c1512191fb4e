use alloc::vec::Vec;

use num_traits::Zero;

use super::{rat_int, Rational};

/// Elementary symmetric functions `e₁,…,e_n` from power sums `s₁,…,s_n`,
/// via `j·e_j = Σ_{i=1}^{j} (−1)^{i−1} e_{j−i} s_i`.
pub fn elementary_from_power_sums(s: &[Rational]) -> Vec<Rational> {
    let mut e: Vec<Rational> = Vec::with_capacity(s.len() + 1);
    e.push(rat_int(1));
    for j in 1..=s.len() {
        let mut acc = Rational::zero();
        for i in 1..=j {
            let term = &e[j - i] * &s[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / rat_int(j as i64));
    }
    e.remove(0);
    e
}
