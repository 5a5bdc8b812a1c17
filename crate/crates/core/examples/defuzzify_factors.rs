//! Turn every factor of the demo panel into a crisp impact score.

use std::fs::File;

use iaa_moderation::elicitation::parse_responses;
use iaa_moderation::fuzzy::RatingScale;
use iaa_moderation::moderation::{defuzzify_factor, ImpactRegistry, ModerationConfig};

fn main() -> iaa_moderation::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/demo_panel.csv");
    let file = File::open(path).map_err(|e| iaa_moderation::Error::io(path, e))?;
    let panel = parse_responses(file, RatingScale::default())?;
    let cfg = ModerationConfig::default();

    let mut registry = ImpactRegistry::new(cfg.scale);
    for factor in panel.factors() {
        let z = panel.factor_zgt2(factor)?;
        registry.insert(factor, defuzzify_factor(&z, &cfg)?.value())?;
    }
    registry.write_csv(std::io::stdout(), 2)
}
