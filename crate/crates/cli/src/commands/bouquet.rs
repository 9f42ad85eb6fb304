use quotatope::weight::{format_rational, parse_rational};
use quotatope::{HomotopyType, ScalarQuotaSystem};

use crate::error::{usage, CliResult};
use crate::BouquetArgs;

pub fn run(args: &BouquetArgs) -> CliResult {
    let weights = args
        .weights
        .iter()
        .map(|w| parse_rational(w.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    let quota = parse_rational(args.quota.trim())?;
    let sys = ScalarQuotaSystem::new(weights, quota)?;
    let ty = match args.vmin {
        Some(v) if v >= sys.len() => return Err(usage(format!("--vmin {v} is not a vertex"))),
        Some(v) => sys.homotopy_type_with_min(v)?,
        None => sys.homotopy_type(),
    };
    let line = match &ty {
        HomotopyType::Empty => "type: empty".to_string(),
        _ => {
            let sig = ty.signature().expect("nonempty complex");
            format!(
                "type: {}\nspheres: {}\neuler_characteristic: {}",
                if sig.is_contractible() { "contractible".to_string() } else { sig.to_string() },
                sig.to_json(),
                ty.euler_characteristic()
            )
        }
    };
    println!("quota: {}\n{line}", format_rational(sys.quota()));
    Ok(())
}
