//! Deterministic JSON reports.
//!
//! Reports are emitted with fixed key order and numbers rendered as
//! decimal with 12 significant digits, so identical inputs produce
//! byte-identical output.

use viviani::Point;

/// JSON value with insertion-ordered object keys.
#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Num(x) => out.push_str(&fmt_sig(*x)),
            Json::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        '\t' => out.push_str("\\t"),
                        '\r' => out.push_str("\\r"),
                        c if (c as u32) < 0x20 => {
                            out.push_str(&format!("\\u{:04x}", c as u32));
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Obj(entries) => {
                out.push('{');
                for (i, (key, value)) in entries.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('"');
                    out.push_str(key);
                    out.push_str("\":");
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

pub fn point_json(p: Point) -> Json {
    Json::Arr(vec![Json::Num(p.x), Json::Num(p.y)])
}

/// Decimal rendering with 12 significant digits; trailing zeros trimmed.
/// Falls back to exponent notation outside `1e-15..1e15`.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    debug_assert!(x.is_finite(), "reports only contain finite numbers");
    let scientific = format!("{:.11e}", x);
    let (mantissa, exp) = scientific.split_once('e').expect("e-notation");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let trimmed = digits.trim_end_matches('0');

    if !(-15..=15).contains(&exp) {
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push(trimmed.as_bytes()[0] as char);
        if trimmed.len() > 1 {
            out.push('.');
            out.push_str(&trimmed[1..]);
        }
        out.push('e');
        out.push_str(&exp.to_string());
        return out;
    }

    let point = 1 + exp; // digit count before the decimal point
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..(-point) {
            out.push('0');
        }
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if out == "-0" {
        "0".to_string()
    } else {
        out
    }
}

/// Renders `Q(x,y) − k = 0` as an equation string, preferring a small
/// integer scaling of the coefficients when one exists (for instance the
/// level-5 form of the 3-4-5 right triangle scales by 25 to
/// `34x^2 + 24xy + 41y^2 - 72x - 96y + 19 = 0`).
pub fn quadratic_equation(q: &viviani::QuadraticForm, k: f64) -> String {
    let coefficients = [q.a, q.b, q.c, q.d, q.e, q.f0 - k];
    let terms = ["x^2", "xy", "y^2", "x", "y", ""];

    if let Some(integers) = integer_scaling(&coefficients) {
        return equation_from(&integers.map(|v| v as f64), &terms, true);
    }
    equation_from(&coefficients, &terms, false)
}

/// Searches multipliers up to 720 that turn all coefficients into
/// integers, then divides out their gcd.
fn integer_scaling(coefficients: &[f64; 6]) -> Option<[i64; 6]> {
    let magnitude = coefficients.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if magnitude == 0.0 {
        return Some([0; 6]);
    }
    'outer: for multiplier in 1..=720u32 {
        let mut integers = [0i64; 6];
        for (slot, &c) in integers.iter_mut().zip(coefficients) {
            let scaled = c * multiplier as f64;
            let rounded = scaled.round();
            if (scaled - rounded).abs() > 1e-9 * scaled.abs().max(1.0) || rounded.abs() > 1e12 {
                continue 'outer;
            }
            *slot = rounded as i64;
        }
        let gcd = integers
            .iter()
            .fold(0i64, |g, &v| gcd_i64(g, v.unsigned_abs() as i64));
        if gcd > 0 {
            for v in &mut integers {
                *v /= gcd;
            }
        }
        return Some(integers);
    }
    None
}

fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn equation_from(coefficients: &[f64; 6], terms: &[&str; 6], integral: bool) -> String {
    let mut out = String::new();
    for (&c, term) in coefficients.iter().zip(terms) {
        if c == 0.0 {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        let is_unit_coefficient = magnitude == 1.0 && !term.is_empty();
        if !is_unit_coefficient {
            if integral {
                out.push_str(&format!("{}", magnitude as i64));
            } else {
                out.push_str(&fmt_sig(magnitude));
            }
        }
        out.push_str(term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(" = 0");
    out
}
