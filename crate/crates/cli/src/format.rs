/// Formats `x` with 15 significant digits, keeping trailing zeros.
///
/// Fixed notation is used for decimal exponents in `[-5, 15)`, scientific
/// notation (`1.23456789012345e-7`) otherwise. The output never depends on
/// locale.
pub fn sig15(x: f64) -> String {
    const DIGITS: i32 = 15;
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return format!("{:.*}", (DIGITS - 1) as usize, 0.0);
    }
    // the exponent is read back from the rounded scientific form so that
    // values like 9.9999999999999999e-1 land in the right decade
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific formatting always carries an exponent");
    if (-5..DIGITS).contains(&exp) {
        format!("{:.*}", (DIGITS - 1 - exp) as usize, x)
    } else {
        sci
    }
}
