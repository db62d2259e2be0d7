//! A seeded verification campaign run from library code.

use finsler3::campaign::{verify, Backend, CampaignConfig, Format, Identity};
use finsler3::Rational;

fn main() -> finsler3::Result<()> {
    let exact = CampaignConfig::new(200, 7, Backend::Exact)?;
    for identity in Identity::ALL {
        let doc = verify::<Rational>(identity, &exact);
        print!("{}", doc.render(Format::Text));
    }

    let float = CampaignConfig::new(200, 7, Backend::Float)?;
    let doc = verify::<f64>(Identity::Equivalence4To20, &float);
    println!("{}", doc.render(Format::Json));
    Ok(())
}
