use super::LaurentPoly;

/// The q-integer `[k] = 1 + q + ... + q^(k-1)` written in a variable `t`
/// with `q = t^stride`.
pub fn q_int(k: u32, stride: u32) -> LaurentPoly {
    assert!(stride > 0, "q_int: stride must be positive");
    LaurentPoly::from_coeffs(0, {
        let mut c = vec![0i64; (k as usize).saturating_sub(1) * stride as usize + 1];
        if k == 0 {
            c.clear();
        }
        for i in 0..k as usize {
            c[i * stride as usize] = 1;
        }
        c
    })
}

/// The q-factorial `[1][2]...[k]`, same variable convention as [`q_int`].
pub fn q_fact(k: u32, stride: u32) -> LaurentPoly {
    (1..=k).fold(LaurentPoly::one(), |acc, i| acc * q_int(i, stride))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_int(3, 1), LaurentPoly::from_coeffs(0, vec![1, 1, 1]));
        assert!(q_int(0, 1).is_zero());
        assert_eq!(q_int(2, 2), LaurentPoly::from_coeffs(0, vec![1, 0, 1]));
        assert_eq!(q_fact(3, 1), LaurentPoly::from_coeffs(0, vec![1, 2, 2, 1]));
        assert_eq!(q_fact(0, 1), LaurentPoly::one());
    }
}
