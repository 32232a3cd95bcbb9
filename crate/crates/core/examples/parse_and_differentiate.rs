// Parse a profile expression and read off exact derivatives up to third
// order.

use revsurf::dsl::parse_expr;

pub fn run() -> revsurf::Result<()> {
    let expr = parse_expr("sin(s)*(1+0.5*sin(s)^2)")?;
    println!("parsed: {expr}");
    for s in [0.0, 0.5, 1.0] {
        let j = expr.eval_jet3(s)?;
        println!("s = {s}: a = {:.6}, a' = {:.6}, a'' = {:.6}, a''' = {:.6}", j.v, j.d1, j.d2, j.d3);
    }

    for bad in ["sin(s", "2*s)", "s^s", "cos()"] {
        match parse_expr(bad) {
            Ok(_) => println!("{bad:?} unexpectedly parsed"),
            Err(e) => println!("{bad:?}: {e} (offset {})", e.offset()),
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
