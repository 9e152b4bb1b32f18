//! Depth-sweep tables rendered as CSV and as a small SVG line plot.
//!
//! Decimal strings are produced with directed rounding (lower endpoints
//! down, upper endpoints and widths up), so every CSV row is itself a
//! valid, coarser enclosure of the interval it came from.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::numeric::{BigRat, Rounding};
use crate::radical::TruncationResult;

pub const DEFAULT_DIGITS: u32 = 12;
pub const CSV_HEADER: &str = "depth,lower,upper,width,tail";

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("cannot plot an empty sweep")]
    EmptySweep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub depth: u64,
    pub lower: String,
    pub upper: String,
    pub width: String,
    pub tail: String,
}

impl SweepRow {
    pub fn from_result(result: &TruncationResult, digits: u32) -> Self {
        let lo = result.value.lo().to_rational();
        let hi = result.value.hi().to_rational();
        Self {
            depth: result.depth,
            lower: format_decimal(&lo, digits, Rounding::Floor),
            upper: format_decimal(&hi, digits, Rounding::Ceil),
            width: format_decimal(&(&hi - &lo), digits, Rounding::Ceil),
            tail: result.tail.name(),
        }
    }
}

pub fn rows_from_results(results: &[TruncationResult], digits: u32) -> Vec<SweepRow> {
    results
        .iter()
        .map(|r| SweepRow::from_result(r, digits))
        .collect()
}

/// `floor(log10 |value|)` for nonzero values.
fn decimal_exponent(value: &BigRat) -> i64 {
    let magnitude = value.abs();
    let bits = magnitude.numer().bits() as i64 - magnitude.denom().bits() as i64;
    let mut k = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while power_of_ten(k) > magnitude {
        k -= 1;
    }
    while power_of_ten(k + 1) <= magnitude {
        k += 1;
    }
    k
}

fn power_of_ten(k: i64) -> BigRat {
    let p = num_traits::pow(BigInt::from(10), k.unsigned_abs() as usize);
    if k >= 0 {
        BigRat::from_integer(p)
    } else {
        BigRat::new(BigInt::from(1), p)
    }
}

/// Plain decimal notation with at most `digits` significant digits, rounded
/// in the given direction. Trailing fractional zeros are dropped.
pub fn format_decimal(value: &BigRat, digits: u32, rounding: Rounding) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1) as i64;
    let scale = digits - 1 - decimal_exponent(value);
    let scaled = value * power_of_ten(scale);
    let mantissa = match rounding {
        Rounding::Floor => scaled.numer().div_floor(scaled.denom()),
        Rounding::Ceil => scaled.numer().div_ceil(scaled.denom()),
    };
    place_decimal_point(&mantissa, scale)
}

/// Renders `mantissa * 10^-scale`.
fn place_decimal_point(mantissa: &BigInt, scale: i64) -> String {
    let sign = if mantissa.is_negative() { "-" } else { "" };
    let mut body = mantissa.abs().to_string();
    if scale <= 0 {
        body.push_str(&"0".repeat((-scale) as usize));
        return format!("{sign}{body}");
    }
    let scale = scale as usize;
    if body.len() <= scale {
        body = format!("{}{body}", "0".repeat(scale - body.len() + 1));
    }
    let (whole, frac) = body.split_at(body.len() - scale);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}

/// Reads a plain decimal string back as an exact rational.
pub fn parse_decimal_exact(text: &str) -> Option<BigRat> {
    crate::numeric::parse_decimal(text)
        .or_else(|| text.trim().parse::<BigInt>().ok().map(BigRat::from_integer))
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.depth, row.lower, row.upper, row.width, row.tail
        );
    }
    out
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 50.0;

struct Axis {
    min: f64,
    max: f64,
    start: f64,
    end: f64,
}

impl Axis {
    fn map(&self, value: f64) -> f64 {
        self.start + (value - self.min) / (self.max - self.min) * (self.end - self.start)
    }
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    let pad = if hi > lo { (hi - lo) * 0.05 } else { 1.0 };
    (lo - pad, hi + pad)
}

/// Line plot of the lower endpoints against depth, with a dashed horizontal
/// reference line at `limit`.
pub fn to_svg(rows: &[SweepRow], limit: &BigRat) -> Result<String, ReportError> {
    if rows.is_empty() {
        return Err(ReportError::EmptySweep);
    }
    let limit_value = limit.to_f64().unwrap_or(0.0);
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|row| {
            let y = parse_decimal_exact(&row.lower)
                .and_then(|v| v.to_f64())
                .unwrap_or(f64::NAN);
            (row.depth as f64, y)
        })
        .collect();

    let min_depth = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_depth = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let (x_min, x_max) = if max_depth > min_depth {
        (min_depth, max_depth)
    } else {
        (min_depth - 1.0, max_depth + 1.0)
    };
    let x_axis = Axis {
        min: x_min,
        max: x_max,
        start: LEFT,
        end: WIDTH - RIGHT,
    };
    let (y_min, y_max) = padded_range(
        points
            .iter()
            .map(|p| p.1)
            .chain(std::iter::once(limit_value)),
    );
    let y_axis = Axis {
        min: y_min,
        max: y_max,
        start: HEIGHT - BOTTOM,
        end: TOP,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );

    let (x0, x1) = (x_axis.start, x_axis.end);
    let (y0, y1) = (y_axis.start, y_axis.end);
    let _ = writeln!(svg, r#"<g class="axes" stroke="black" stroke-width="1">"#);
    let _ = writeln!(
        svg,
        r#"<line x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y0:.3}"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{x0:.3}" y1="{y0:.3}" x2="{x0:.3}" y2="{y1:.3}"/>"#
    );
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<g class="ticks" font-family="sans-serif" font-size="11">"#
    );
    let depth_step = ((max_depth - min_depth) / 10.0).ceil().max(1.0);
    let mut depth = min_depth;
    while depth <= max_depth {
        let x = x_axis.map(depth);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.3}" y1="{y0:.3}" x2="{x:.3}" y2="{:.3}" stroke="black"/>"#,
            y0 + 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x:.3}" y="{:.3}" text-anchor="middle">{depth}</text>"#,
            y0 + 18.0
        );
        depth += depth_step;
    }
    for i in 0..=4 {
        let value = y_min + (y_max - y_min) * f64::from(i) / 4.0;
        let y = y_axis.map(value);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.3}" y1="{y:.3}" x2="{x0:.3}" y2="{y:.3}" stroke="black"/>"#,
            x0 - 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{value:.4}</text>"#,
            x0 - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(svg, "</g>");

    let limit_y = y_axis.map(limit_value);
    let _ = writeln!(
        svg,
        r#"<line class="limit" x1="{x0:.3}" y1="{limit_y:.3}" x2="{x1:.3}" y2="{limit_y:.3}" stroke="gray" stroke-dasharray="6 4"/>"#
    );

    let coords: Vec<String> = points
        .iter()
        .map(|&(d, v)| format!("{:.3},{:.3}", x_axis.map(d), y_axis.map(v)))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline class="sweep" fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
        coords.join(" ")
    );

    let _ = writeln!(
        svg,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12" text-anchor="middle">depth</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="11" text-anchor="end">limit {}</text>"#,
        x1,
        limit_y - 6.0,
        crate::numeric::format_rational(limit)
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
