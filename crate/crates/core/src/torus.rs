//! Torus conventions: T^d = [-1/2, 1/2)^d with minimum-image distance.

/// Wrap a single coordinate into [-1/2, 1/2).
#[inline]
pub fn wrap_coord(x: f64) -> f64 {
    let y = x - x.round();
    // x.round() maps 0.5 -> 1.0 for positive halves, so y is in [-1/2, 1/2].
    if y >= 0.5 {
        y - 1.0
    } else {
        y
    }
}

/// Wrap a point in place into [-1/2, 1/2)^d.
#[inline]
pub fn wrap_point(x: &mut [f64]) {
    for c in x.iter_mut() {
        *c = wrap_coord(*c);
    }
}

/// Minimum-image difference a - b, component-wise in [-1/2, 1/2).
#[inline]
pub fn min_image_diff(a: &[f64], b: &[f64], out: &mut [f64]) {
    for i in 0..a.len() {
        out[i] = wrap_coord(a[i] - b[i]);
    }
}

/// Minimum-image distance between two points.
#[inline]
pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        let d = wrap_coord(a[i] - b[i]);
        s += d * d;
    }
    s.sqrt()
}

/// Euclidean norm of a short vector.
#[inline]
pub fn norm(x: &[f64]) -> f64 {
    x.iter().map(|c| c * c).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_is_half_open() {
        assert_eq!(wrap_coord(0.5), -0.5);
        assert_eq!(wrap_coord(-0.5), -0.5);
        assert_eq!(wrap_coord(0.0), 0.0);
        assert!((wrap_coord(1.3) - 0.3).abs() < 1e-15);
        assert!((wrap_coord(-1.3) + 0.3).abs() < 1e-15);
    }

    #[test]
    fn min_image_takes_nearest() {
        let a = [0.45, 0.0, 0.0];
        let b = [-0.45, 0.0, 0.0];
        assert!((distance(&a, &b) - 0.1).abs() < 1e-15);
    }
}
