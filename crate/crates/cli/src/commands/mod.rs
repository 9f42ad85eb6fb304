pub mod arith;
pub mod bouquet;
pub mod random;
pub mod seq;
pub mod series;
pub mod verify;

use crate::error::CliResult;
use crate::svg::{self, Series};
use crate::table::{emit, Table};
use crate::OutputArgs;

/// Writes `table` where `out` says, plus a scatter of `ys` against `x` when
/// an SVG path was given.
pub fn write(table: &Table, out: &OutputArgs, title: &str, x: &str, ys: &[&str]) -> CliResult {
    emit(&table.render(out.format), out.out.as_deref())?;
    if let Some(path) = &out.svg {
        emit(&plot(table, title, x, ys), Some(path))?;
    }
    Ok(())
}

pub fn plot(table: &Table, title: &str, x: &str, ys: &[&str]) -> String {
    let xs = table.column(x);
    let series: Vec<Series> = ys
        .iter()
        .map(|y| Series {
            label: y.to_string(),
            points: xs
                .iter()
                .zip(table.column(y))
                .filter_map(|(a, b)| Some(((*a)?, b?)))
                .collect(),
        })
        .collect();
    svg::scatter(title, x, &series)
}
