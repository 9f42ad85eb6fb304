use std::path::PathBuf;

use num_traits::ToPrimitive;
use quotatope::seq::{self, FitTransform, SequenceKind, SequenceSpec};

use super::plot;
use crate::error::{usage, CliResult};
use crate::table::{emit, Cell, Table};
use crate::{SeqArgs, SeqKind};

/// Ratio columns plotted with `--svg`.
const PLOTTED: usize = 6;

pub fn run(args: &SeqArgs) -> CliResult {
    let (kind, transform, name) = match args.kind {
        SeqKind::Primes => (SequenceKind::Primes, FitTransform::PrimeLog, "primes"),
        SeqKind::Squares => (SequenceKind::Squares, FitTransform::SquareRoot, "squares"),
        SeqKind::Cubes => (SequenceKind::Cubes, FitTransform::CubeRoot, "cubes"),
    };
    if args.q_max < 2 {
        return Err(usage("--qmax must be at least 2"));
    }
    if args.q_max > 10_000_000 {
        return Err(usage("--qmax above 10^7 is not supported"));
    }
    let dir = args.out.clone().unwrap_or_else(|| PathBuf::from(format!("seq-{name}")));
    let spec = SequenceSpec::below(kind, args.q_max)?;
    let t = seq::count_table(&spec, args.q_max, args.i_max)?;
    let h = seq::homology_table(&t, spec.v1())?;
    let r = seq::ratio_series(&t, &h)?;
    let i_max = args.i_max;
    let cols = |prefix: &str| {
        std::iter::once("q".to_string()).chain((0..=i_max).map(|i| format!("{prefix}_{i}"))).collect::<Vec<_>>()
    };

    let mut s = Table::new(cols("s"));
    let mut hh = Table::new(cols("h"));
    let mut sr = Table::new(cols("S"));
    let mut hr = Table::new(cols("H"));
    let mut sa = Table::new(cols("S_ave"));
    let mut ha = Table::new(cols("H_ave"));
    for q in 1..=args.q_max {
        let lead = Cell::int(q);
        let mut rows: [Vec<Cell>; 6] = std::array::from_fn(|_| vec![lead.clone()]);
        for i in 0..=i_max {
            rows[0].push(Cell::int(t.s_ref(i, q)));
            rows[1].push(Cell::int(h.h(i, q)?));
            rows[2].push(ratio(r.s_ratio(i, q)));
            rows[3].push(ratio(r.h_ratio(i, q)));
            rows[4].push(Cell::Real(r.s_average(i, q)));
            rows[5].push(Cell::Real(r.h_average(i, q)));
        }
        let [a, b, c, d, e, f] = rows;
        s.push(a);
        hh.push(b);
        sr.push(c);
        hr.push(d);
        sa.push(e);
        ha.push(f);
    }

    let mut fits = Table::new(["i", "slope", "intercept", "residual", "points"]);
    for i in 1..=i_max {
        match seq::slope_fit(&t, i, transform) {
            Ok(f) => fits.push(vec![
                Cell::int(i),
                Cell::Real(f.slope),
                Cell::Real(f.intercept),
                Cell::Real(f.residual),
                Cell::int(f.points),
            ]),
            Err(_) => fits.push(vec![Cell::int(i), Cell::Empty, Cell::Empty, Cell::Empty, Cell::int(0)]),
        }
    }

    let ext = args.format.extension();
    for (stem, table) in [("s", &s), ("h", &hh), ("S", &sr), ("H", &hr), ("S_ave", &sa), ("H_ave", &ha), ("fits", &fits)] {
        emit(&table.render(args.format), Some(&dir.join(format!("{stem}.{ext}"))))?;
    }
    if args.svg {
        for (stem, table) in [("S", &sr), ("H", &hr), ("S_ave", &sa), ("H_ave", &ha)] {
            let ys: Vec<String> = (0..=i_max.min(PLOTTED)).map(|i| format!("{stem}_{i}")).collect();
            let ys: Vec<&str> = ys.iter().map(String::as_str).collect();
            let title = format!("{stem}_i(q) for {name}");
            emit(&plot(table, &title, "q", &ys), Some(&dir.join(format!("{stem}.svg"))))?;
        }
    }
    eprintln!(
        "{} {name} below {}: {} tables written to {}",
        spec.elements().len(),
        args.q_max,
        7,
        dir.display()
    );
    Ok(())
}

fn ratio(r: Option<&quotatope::Rational>) -> Cell {
    r.and_then(|x| x.to_f64()).map_or(Cell::Empty, Cell::Real)
}
