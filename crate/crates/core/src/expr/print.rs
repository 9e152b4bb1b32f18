use super::RadExpr;
use crate::numeric::BigRat;

/// Canonical text form, accepted back by [`super::parse`].
///
/// Parentheses are emitted only where the grammar needs them to rebuild the
/// same tree. Negative numbers have no surface syntax and print with a
/// leading `-` that the parser rejects.
pub fn print_text(expr: &RadExpr) -> String {
    let mut out = String::new();
    write_text(expr, &mut out);
    out
}

fn write_text(expr: &RadExpr, out: &mut String) {
    match expr {
        RadExpr::Number(value) => out.push_str(&rational_text(value)),
        RadExpr::Tail => out.push_str("..."),
        RadExpr::Sum(terms) => {
            for (i, term) in terms.iter().enumerate() {
                if i > 0 {
                    out.push_str(" + ");
                }
                write_grouped(term, matches!(term, RadExpr::Sum(_)), out);
            }
        }
        RadExpr::Product(factors) => {
            for (i, factor) in factors.iter().enumerate() {
                if i > 0 {
                    out.push_str(" * ");
                }
                let group = matches!(factor, RadExpr::Sum(_) | RadExpr::Product(_));
                write_grouped(factor, group, out);
            }
        }
        RadExpr::Power { base, exponent } => {
            let group = matches!(
                **base,
                RadExpr::Sum(_) | RadExpr::Product(_) | RadExpr::Power { .. }
            );
            write_grouped(base, group, out);
            out.push('^');
            out.push_str(&exponent.to_string());
        }
        RadExpr::Root { degree, body } => {
            out.push_str(&format!("root({degree}, "));
            write_text(body, out);
            out.push(')');
        }
    }
}

fn write_grouped(expr: &RadExpr, group: bool, out: &mut String) {
    if group {
        out.push('(');
        write_text(expr, out);
        out.push(')');
    } else {
        write_text(expr, out);
    }
}

fn rational_text(value: &BigRat) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// LaTeX form: `\sqrt[d]{...}` for roots (`\sqrt{...}` for square roots),
/// `^{k}` for powers, `\frac{p}{q}` for fractions and `\ldots` for the tail.
/// A factor that is a root or the tail is juxtaposed; other factors are
/// joined with `\cdot`.
pub fn print_latex(expr: &RadExpr) -> String {
    let mut out = String::new();
    write_latex(expr, &mut out);
    out
}

fn write_latex(expr: &RadExpr, out: &mut String) {
    match expr {
        RadExpr::Number(value) => out.push_str(&rational_latex(value)),
        RadExpr::Tail => out.push_str("\\ldots"),
        RadExpr::Sum(terms) => {
            for (i, term) in terms.iter().enumerate() {
                if i > 0 {
                    out.push('+');
                }
                write_latex_grouped(term, matches!(term, RadExpr::Sum(_)), out);
            }
        }
        RadExpr::Product(factors) => {
            for (i, factor) in factors.iter().enumerate() {
                if i > 0 && !matches!(factor, RadExpr::Root { .. } | RadExpr::Tail) {
                    out.push_str("\\cdot ");
                }
                let group = matches!(factor, RadExpr::Sum(_) | RadExpr::Product(_));
                write_latex_grouped(factor, group, out);
            }
        }
        RadExpr::Power { base, exponent } => {
            let group = match &**base {
                RadExpr::Number(value) => !value.is_integer() || value.numer() < &0.into(),
                RadExpr::Root { .. } | RadExpr::Tail => false,
                _ => true,
            };
            write_latex_grouped(base, group, out);
            out.push_str(&format!("^{{{exponent}}}"));
        }
        RadExpr::Root { degree, body } => {
            if *degree == 2 {
                out.push_str("\\sqrt{");
            } else {
                out.push_str(&format!("\\sqrt[{degree}]{{"));
            }
            write_latex(body, out);
            out.push('}');
        }
    }
}

fn write_latex_grouped(expr: &RadExpr, group: bool, out: &mut String) {
    if group {
        out.push_str("\\left(");
        write_latex(expr, out);
        out.push_str("\\right)");
    } else {
        write_latex(expr, out);
    }
}

fn rational_latex(value: &BigRat) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", value.numer(), value.denom())
    }
}
