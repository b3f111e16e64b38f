//! Log-space special functions for Fock-state weights.

/// A real number stored as `sign * exp(ln_abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: f64,
    pub ln_abs: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        sign: 0.0,
        ln_abs: f64::NEG_INFINITY,
    };

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            SignedLog::ZERO
        } else {
            SignedLog {
                sign: v.signum(),
                ln_abs: v.abs().ln(),
            }
        }
    }

    pub fn value(&self) -> f64 {
        self.sign * self.ln_abs.exp()
    }
}

/// `ln k!` for `k = 0..=n_max`.
pub fn ln_factorials(n_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = 0.0;
    out.push(0.0);
    for k in 1..=n_max {
        acc += (k as f64).ln();
        out.push(acc);
    }
    out
}

const RESCALE: f64 = 1e100;

/// Physicists' Hermite polynomials `H_0(x) ..= H_{n_max}(x)` from the
/// three-term recurrence `H_{k+1} = 2x H_k - 2k H_{k-1}`, carrying a running
/// log scale so large orders neither overflow nor underflow.
pub fn hermite_signed_log(n_max: usize, x: f64) -> Vec<SignedLog> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(SignedLog {
        sign: 1.0,
        ln_abs: 0.0,
    });
    if n_max == 0 {
        return out;
    }
    let mut scale = 0.0f64;
    let mut prev = 1.0f64;
    let mut cur = 2.0 * x;
    out.push(SignedLog::from_value(cur));
    for k in 1..n_max {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
        let big = cur.abs().max(prev.abs());
        if big > RESCALE || (big < 1.0 / RESCALE && big > 0.0) {
            let s = big.ln();
            cur /= big;
            prev /= big;
            scale += s;
        }
        let mut v = SignedLog::from_value(cur);
        v.ln_abs += scale;
        out.push(v);
    }
    out
}
