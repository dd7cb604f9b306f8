use std::fmt::Write;

use super::{Formula, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderStyle {
    /// Binary connectives parenthesized; quantifiers parenthesized only as operands.
    #[default]
    Standard,
    /// Every compound operand parenthesized, negations and quantifiers included.
    Full,
}

pub fn render(f: &Formula) -> String {
    render_with(f, RenderStyle::Standard)
}

pub fn render_with(f: &Formula, style: RenderStyle) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, style);
    out
}

fn write_term(out: &mut String, t: &Term) {
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Numeral(n) => {
            let _ = write!(out, "{n}");
        }
    }
}

fn write_operand(out: &mut String, f: &Formula, style: RenderStyle) {
    let wrap = match style {
        RenderStyle::Standard => f.is_quantifier(),
        RenderStyle::Full => matches!(f, Formula::Not(_)) || f.is_quantifier(),
    };
    if wrap {
        out.push('(');
        write_formula(out, f, style);
        out.push(')');
    } else {
        write_formula(out, f, style);
    }
}

fn write_formula(out: &mut String, f: &Formula, style: RenderStyle) {
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::Pred(name, args) => {
            out.push_str(name);
            out.push('(');
            for (i, t) in args.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_term(out, t);
            }
            out.push(')');
        }
        Formula::Not(a) => {
            out.push('~');
            write_operand(out, a, style);
        }
        Formula::And(a, b) => write_binary(out, a, "&", b, style),
        Formula::Or(a, b) => write_binary(out, a, "|", b, style),
        Formula::Implies(a, b) => write_binary(out, a, "->", b, style),
        Formula::Iff(a, b) => write_binary(out, a, "<->", b, style),
        Formula::Exists(v, body) | Formula::ForAll(v, body) => {
            out.push_str(if matches!(f, Formula::Exists(..)) {
                "exists "
            } else {
                "forall "
            });
            out.push_str(v);
            out.push_str(". ");
            match style {
                RenderStyle::Standard => write_formula(out, body, style),
                RenderStyle::Full => write_operand(out, body, style),
            }
        }
    }
}

fn write_binary(out: &mut String, a: &Formula, op: &str, b: &Formula, style: RenderStyle) {
    out.push('(');
    write_operand(out, a, style);
    out.push(' ');
    out.push_str(op);
    out.push(' ');
    write_operand(out, b, style);
    out.push(')');
}
