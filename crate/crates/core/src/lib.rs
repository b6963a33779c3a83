pub mod algebra;
pub mod symmetric;
pub mod gpd;
pub mod classes;
pub mod schubert;
pub mod degree;
pub mod cli;
