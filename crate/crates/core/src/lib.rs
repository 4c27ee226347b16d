pub mod cli;
pub mod codemix;
pub mod language;
pub mod normalise;
pub mod romanise;
pub mod router;
pub mod script;
