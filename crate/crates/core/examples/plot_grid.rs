//! Sample a type-1 curve and a type-2 shading grid for external plotting.

use std::fs::File;

use iaa_moderation::elicitation::parse_responses;
use iaa_moderation::fuzzy::RatingScale;

fn main() -> iaa_moderation::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/table_i_ii.csv");
    let file = File::open(path).map_err(|e| iaa_moderation::Error::io(path, e))?;
    let panel = parse_responses(file, RatingScale::default())?;

    let group = panel.build_group_fs("q", "A")?;
    println!("x,grade");
    for (x, g) in group.set.function().sample(0.5)? {
        println!("{x:.2},{g:.4}");
    }

    let z = panel.factor_zgt2("q")?;
    let rows = z.sample(1.0, 0.25)?;
    println!("\nx,y,z ({} rows)", rows.len());
    for (x, y, level) in rows.iter().filter(|r| r.2 > 0.0) {
        println!("{x:.2},{y:.2},{level:.2}");
    }
    Ok(())
}
