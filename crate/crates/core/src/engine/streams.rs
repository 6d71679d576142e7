//! Counter-based random substreams.
//!
//! Every `(master_seed, scenario_id, iteration, slot)` tuple maps to its own
//! ChaCha8 key and every [`StreamRole`] to a stream number under that key.
//! The mapping is injective, so distinct tuples never share a stream and no
//! stream depends on whether any other stream was ever generated.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SubStream = ChaCha8Rng;

/// What a substream is used for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u64)]
pub enum StreamRole {
    Task = 0,
    Direct = 1,
    ApIrs = 2,
    IrsDevice = 3,
}

/// Identifies one slot of one trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub master_seed: u64,
    pub scenario_id: u64,
    pub iteration: u64,
    pub slot: u64,
}

pub fn derive_substream(key: StreamKey, role: StreamRole) -> SubStream {
    let mut seed = [0u8; 32];
    for (chunk, word) in seed
        .chunks_exact_mut(8)
        .zip([key.master_seed, key.scenario_id, key.iteration, key.slot])
    {
        chunk.copy_from_slice(&word.to_le_bytes());
    }
    let mut rng = ChaCha8Rng::from_seed(seed);
    rng.set_stream(role as u64);
    rng
}
