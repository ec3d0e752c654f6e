//! Driving a verification campaign from code rather than the command line.
//!
//! ```text
//! cargo run --release --example campaign_report
//! ```

use scatter6::campaign::{self, CampaignConfig, OutputFormat};

fn main() -> scatter6::Result<()> {
    let config = CampaignConfig {
        e: 2,
        checks: campaign::parse_checks("scattered_fiber,scattered_dickson,lemmas,linset")?,
        output_format: OutputFormat::Csv,
        limit: Some(6),
        ..CampaignConfig::default()
    };
    let out = campaign::cmd_enumerate(&config)?;
    print!("{}", out.body);
    println!("exit code {}", out.exit_code());
    Ok(())
}
