//! Moderate base risk scores by the conditions each driver faced.

use iaa_moderation::fuzzy::RatingScale;
use iaa_moderation::moderation::{moderate, Ensemble, ImpactRegistry, ModerationConfig};

fn main() -> iaa_moderation::Result<()> {
    let registry = ImpactRegistry::from_pairs(
        RatingScale::default(),
        [
            ("high_time_pressure", 2.45),
            ("low_time_pressure", 7.55),
            ("absence_of_cameras", 4.36),
            ("presence_of_cameras", 5.76),
            ("rainy", 3.78),
            ("energetic", 6.02),
        ],
    )?;
    let drivers = [
        ("A", 83.09, ["high_time_pressure", "rainy"]),
        ("B", 83.09, ["low_time_pressure", "rainy"]),
        ("C", 75.24, ["absence_of_cameras", "energetic"]),
        ("D", 75.24, ["presence_of_cameras", "energetic"]),
    ];

    for ensemble in [
        Ensemble::Mean,
        Ensemble::Min,
        Ensemble::WeightedMean(vec![2.0, 1.0]),
    ] {
        let cfg = ModerationConfig {
            ensemble,
            ..Default::default()
        };
        println!("{}", cfg.ensemble.name());
        for (id, base, conditions) in &drivers {
            let r = moderate(*base, conditions, &registry, &cfg)?;
            println!(
                "  {id}: {base:.2} x {:.3} = {:.2}",
                r.multiplier, r.moderated_score
            );
        }
    }

    let cfg = ModerationConfig::default();
    let r = moderate(83.09, &["high_time_pressure", "rainy"], &registry, &cfg)?;
    println!("audit for A:");
    for line in &r.audit {
        println!("  {line}");
    }
    Ok(())
}
