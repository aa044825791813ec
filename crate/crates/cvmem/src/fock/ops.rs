//! Sparse generator applications and Taylor exponentials on truncated
//! Fock spaces. Convention: X = (a + a^dag)/2, P = (a - a^dag)/(2i),
//! vacuum variance 1/4.

use num_complex::Complex64;

pub type C64 = Complex64;

/// y += g * x for the joint generator of a QND unitary U = exp(G).
///
/// Type 2: U = exp(-2 i k X_A P_L) reproduces
///   X'_L = X_L + k X_A, P'_A = P_A - k P_L exactly (the generator is
///   nilpotent at the Heisenberg level).
/// Type 1: U = exp(-2 i k P_L P_A) reproduces
///   X'_L = X_L + k P_A, X'_A = X_A + k P_L.
///
/// Derived from [X, P] = i/2 and validated against the symplectic maps.
pub struct JointGenerator {
    pub kind: crate::gaussian::symplectic::QndKind,
    pub kappa: f64,
    pub nl: usize,
    pub na: usize,
}

impl JointGenerator {
    /// Apply G to psi (indexed l * na + a), writing into out.
    pub fn apply(&self, psi: &[C64], out: &mut [C64]) {
        let (nl, na) = (self.nl, self.na);
        out.iter_mut().for_each(|v| *v = C64::new(0.0, 0.0));
        let k = self.kappa;
        match self.kind {
            crate::gaussian::symplectic::QndKind::Type2 => {
                // G = -2 i k X_A P_L; X|a> = (sqrt(a)|a-1> + sqrt(a+1)|a+1>)/2
                // P|l> = (-i sqrt(l)|l-1> + i sqrt(l+1)|l+1>)/2  [P = (a-a^dag)/2i]
                // so G = -2ik * X_A P_L has entries (-2ik)(x-part)(p-part)
                for l in 0..nl {
                    for a in 0..na {
                        let c = psi[l * na + a];
                        if c == C64::new(0.0, 0.0) {
                            continue;
                        }
                        // enumerate (dl, dp coefficient of P_L) x (da, x coefficient of X_A)
                        let p_terms: [(isize, C64); 2] = [
                            (-1, C64::new(0.0, -0.5) * (l as f64).sqrt()),
                            (1, C64::new(0.0, 0.5) * ((l + 1) as f64).sqrt()),
                        ];
                        let x_terms: [(isize, f64); 2] = [
                            (-1, 0.5 * (a as f64).sqrt()),
                            (1, 0.5 * ((a + 1) as f64).sqrt()),
                        ];
                        for (dl, pl) in p_terms {
                            let l2 = l as isize + dl;
                            if l2 < 0 || l2 >= nl as isize {
                                continue;
                            }
                            for (da, xa) in x_terms {
                                let a2 = a as isize + da;
                                if a2 < 0 || a2 >= na as isize {
                                    continue;
                                }
                                let coeff = C64::new(0.0, -2.0 * k) * pl * xa;
                                out[l2 as usize * na + a2 as usize] += coeff * c;
                            }
                        }
                    }
                }
            }
            crate::gaussian::symplectic::QndKind::Type1 => {
                // G = -2 i k P_L P_A
                for l in 0..nl {
                    for a in 0..na {
                        let c = psi[l * na + a];
                        if c == C64::new(0.0, 0.0) {
                            continue;
                        }
                        let p_l: [(isize, C64); 2] = [
                            (-1, C64::new(0.0, -0.5) * (l as f64).sqrt()),
                            (1, C64::new(0.0, 0.5) * ((l + 1) as f64).sqrt()),
                        ];
                        let p_a: [(isize, C64); 2] = [
                            (-1, C64::new(0.0, -0.5) * (a as f64).sqrt()),
                            (1, C64::new(0.0, 0.5) * ((a + 1) as f64).sqrt()),
                        ];
                        for (dl, pl) in p_l {
                            let l2 = l as isize + dl;
                            if l2 < 0 || l2 >= nl as isize {
                                continue;
                            }
                            for (da, pa) in p_a {
                                let a2 = a as isize + da;
                                if a2 < 0 || a2 >= na as isize {
                                    continue;
                                }
                                let coeff = C64::new(0.0, -2.0 * k) * pl * pa;
                                out[l2 as usize * na + a2 as usize] += coeff * c;
                            }
                        }
                    }
                }
            }
        }
    }

    /// Over-estimate of the 1-norm of G, used to pick the Taylor scaling.
    pub fn norm_bound(&self) -> f64 {
        2.0 * self.kappa.abs() * (self.nl.max(self.na) as f64 + 1.0)
    }
}

/// v <- exp(G) v by scaled Taylor summation: split exp(G) into 2^s
/// factors with norm <= 1/2 each and sum the series to machine epsilon.
pub fn expm_multiply<F>(apply: F, norm_bound: f64, v: &mut Vec<C64>)
where
    F: Fn(&[C64], &mut [C64]),
{
    let s = norm_bound.max(1e-12).log2().ceil().max(0.0) as u32 + 1;
    let steps = 1u64 << s.min(40);
    let scale = 1.0 / steps as f64;
    let n = v.len();
    let mut term = vec![C64::new(0.0, 0.0); n];
    let mut fresh = vec![C64::new(0.0, 0.0); n];
    for _ in 0..steps {
        term.copy_from_slice(v);
        for k in 1..200u32 {
            apply(&term.clone(), &mut fresh);
            let fk = scale / k as f64;
            let mut tnorm = 0.0;
            let mut vnorm = 0.0;
            for i in 0..n {
                term[i] = fresh[i] * fk;
                v[i] += term[i];
                tnorm += term[i].norm_sqr();
                vnorm += v[i].norm_sqr();
            }
            if tnorm <= 1e-34 * vnorm {
                break;
            }
        }
    }
}

/// Single-mode squeezer: v <- exp(zeta/2 (a^2 - a^dag^2)) v,
/// which maps X -> e^{-zeta} X in the Heisenberg picture.
pub fn squeeze_vec(zeta: f64, v: &mut Vec<C64>) {
    let n = v.len();
    let apply = |x: &[C64], out: &mut [C64]| {
        out.iter_mut().for_each(|o| *o = C64::new(0.0, 0.0));
        for i in 0..n {
            let c = x[i];
            if c == C64::new(0.0, 0.0) {
                continue;
            }
            // a^2 |i> = sqrt(i(i-1)) |i-2>; a^dag^2 |i> = sqrt((i+1)(i+2)) |i+2>
            if i >= 2 {
                out[i - 2] += c * (0.5 * zeta * ((i * (i - 1)) as f64).sqrt());
            }
            if i + 2 < n {
                out[i + 2] -= c * (0.5 * zeta * (((i + 1) * (i + 2)) as f64).sqrt());
            }
        }
    };
    expm_multiply(apply, zeta.abs() * (n as f64 + 2.0), v);
}
