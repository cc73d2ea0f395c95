/// Decimal formatting with 9 significant digits, period separator, no
/// locale. Used for every numeric field in reports, CSV and JSON-adjacent
/// text so golden outputs are reproducible.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (8 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}
