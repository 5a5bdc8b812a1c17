//! Pairwise Jaccard similarity between professions on the bundled demo panel.

use std::fs::File;

use iaa_moderation::elicitation::parse_responses;
use iaa_moderation::fuzzy::RatingScale;

fn main() -> iaa_moderation::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/demo_panel.csv");
    let file = File::open(path).map_err(|e| iaa_moderation::Error::io(path, e))?;
    let panel = parse_responses(file, RatingScale::default())?;

    for factor in panel.factors() {
        let m = panel.similarity_matrix(factor)?;
        println!("{factor}");
        println!(
            "      {}",
            m.labels
                .iter()
                .map(|l| format!("{l:>6}"))
                .collect::<String>()
        );
        for (label, row) in m.labels.iter().zip(&m.values) {
            println!(
                "{label:>6}{}",
                row.iter().map(|v| format!("{v:>6.3}")).collect::<String>()
            );
        }
    }
    Ok(())
}
