//! Descriptive statistics per factor and profession.

use std::fs::File;

use iaa_moderation::elicitation::{parse_responses, summarize, FactorManifest};
use iaa_moderation::fuzzy::RatingScale;

fn open(name: &str) -> iaa_moderation::Result<File> {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    File::open(&path).map_err(|e| iaa_moderation::Error::io(path, e))
}

fn main() -> iaa_moderation::Result<()> {
    let panel = parse_responses(open("demo_panel.csv")?, RatingScale::default())?;
    let manifest = FactorManifest::parse(open("factor_manifest.csv")?)?;
    manifest.check_panel(&panel)?;

    for factor in panel.factors() {
        if let Some(info) = manifest.get(factor) {
            println!("{} [{}]", info.display_name, info.category);
        }
    }
    summarize(&panel)?.write_csv(std::io::stdout())
}
