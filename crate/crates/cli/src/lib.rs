pub use semsig_core as core;
