//! Double-double arithmetic for residual evaluation during polishing.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }

    pub fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Self { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    fn mul_c64(self, z: Complex64) -> Self {
        Self {
            re: self.re.mul_f64(z.re).add(self.im.mul_f64(z.im).neg()),
            im: self.re.mul_f64(z.im).add(self.im.mul_f64(z.re)),
        }
    }

    fn add_real(self, c: Dd) -> Self {
        Self {
            re: self.re.add(c),
            im: self.im,
        }
    }

    fn add(self, o: Self) -> Self {
        Self {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Coefficients of the `k`-th derivative, scaled by nothing (exact integer
/// factors applied in double-double).
pub fn derivative_coeffs(coeffs: &[f64], k: usize) -> Vec<Dd> {
    if k >= coeffs.len() {
        return vec![Dd::default()];
    }
    (k..coeffs.len())
        .map(|j| {
            let mut c = Dd::from_f64(coeffs[j]);
            for t in 0..k {
                c = c.mul_f64((j - t) as f64);
            }
            c
        })
        .collect()
}

/// `(p(z), p'(z))` by Horner in double-double; `coeffs` ascending.
pub fn horner_with_derivative(coeffs: &[Dd], z: Complex64) -> (Complex64, Complex64) {
    let mut value = CDd::default();
    let mut deriv = CDd::default();
    for c in coeffs.iter().rev() {
        deriv = deriv.mul_c64(z).add(value);
        value = value.mul_c64(z).add_real(*c);
    }
    (value.to_c64(), deriv.to_c64())
}

/// A bound on the double-double Horner rounding error, `Σ|c_j| |z|^j`
/// times a small multiple of `u²`.
pub fn horner_error_bound(coeffs: &[Dd], z: Complex64) -> f64 {
    let az = z.norm();
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * az + c.hi.abs();
    }
    let u = f64::EPSILON / 2.0;
    16.0 * (coeffs.len() as f64 + 1.0) * u * u * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn captures_cancellation_lost_in_f64() {
        // (x - 1)^2 = x^2 - 2x + 1 near x = 1 + 2^-30.
        let c = [1.0, -2.0, 1.0].map(Dd::from_f64);
        let x = 1.0 + 2f64.powi(-30);
        let (v, d) = horner_with_derivative(&c, Complex64::new(x, 0.0));
        assert_eq!(v.re, 2f64.powi(-60));
        assert_eq!(d.re, 2.0 * 2f64.powi(-30));
    }

    #[test]
    fn derivative_coefficients() {
        let d = derivative_coeffs(&[1.0, 3.0, 3.0, 1.0], 2);
        let v: Vec<f64> = d.iter().map(|x| x.to_f64()).collect();
        assert_eq!(v, vec![6.0, 6.0]);
    }
}
