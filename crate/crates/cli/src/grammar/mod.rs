//! The query language: a line-oriented document of declarations and queries.

mod ast;
mod lex;
mod parse;
mod print;

pub use ast::*;
pub use lex::ParseError;
pub use parse::parse;
pub use print::print;

/// Reference text printed by `gts print-grammar`.
pub const GRAMMAR: &str = r#"doc       := [ "version" 1 ] { stmt SEP }          SEP is a newline or ';'
stmt      := "set" NAME "=" set | "family" NAME "=" family | "metric" NAME "=" metric
           | "bornology" NAME "=" born | "map" NAME "=" map | "query" query
comment   := '#' to end of line
rational  := INT [ "/" NAT ]                       exact, no decimals; normalized on read
ext       := rational | "-inf" | "+inf"
bound     := "closed" rational | "open" ext
set       := "empty" | "reals" | "point" rational | "interval(" bound "," bound ")"
           | "union(" set,* ")" | "intersect(" set,* ")" | "complement(" set ")"
           | "difference(" set "," set ")" | "periodic(period" rational "," set ")"
           | "tail_left(cut" rational ", period" rational "," set ")"     x < cut
           | "tail_right(cut" rational ", period" rational "," set ")"    x > cut
           | "interior(" topo "," set ")" | "closure(" topo "," set ")"
           | "affine(" rational "," rational "," set ")"                  image under x -> a*x + b
           | NAME
topo      := nat | upper | lower | sorg_r | sorg_l | discrete
range     := "all" | "from" INT | "upto" INT | INT ".." INT
family    := "finite(" set,* ")" | "periodic(seed" set ", period" rational "," range ")"
           | "split(cut" rational "," family "," family ")" | "restrict(" family "," set ")"
           | "join(" family,* ")"
           | "accumulating(start" rational ", limit" ext "," (rays | open_tiles | half_open_tiles) ")"
           | NAME
metric    := d_n | d_n1 | d_n_plus | d_n_plus_1 | d_u | rho_u | rho_u1 | rho_S | rho_S1 | rho_L
           | rho_0 | rho_0_1 | rho_S_minus | "conj(" metric ")" | "float(" metric ")" | NAME
send      := "closed" rational ":" rational | "open" rational ":" rational | "open -inf" | "open +inf"
born      := FB | ALL | CB_nat | UB | LB | UB_rwo | "bounded(" metric ")"
           | "schema(from" NAT { ", piece(" send "," send ")" } ")"       end a:b means a + b*n
           | NAME
map       := "affine(" rational "," rational ")"
           | "piecewise(breaks(" rational,* ")" { ", piece(" slope "," intercept ")" } ")"
           | NAME
line      := standard/VARIANT | sorgenfrey/VARIANT | uu | ul | uf
VARIANT   := ut | om | st | lom | lst | slom | l_plus_om | l_minus_om | l_plus_st | l_minus_st
           | sl_plus_om | sl_minus_om | rom
query     := show set | boundedness set | contains set at rational | subset set set | equal set set
           | is_open topo set | eval metric rational rational
           | ball metric at rational radius rational | nbhd metric set radius rational
           | ess_finite family on set | locally_ess_finite family
           | op line set | cov line family | sm line set | cb line set | acb line set | pt line
           | member born set | base_index born set | proper born topo topo upto NAT | base born topo
           | chain metric born delta rational upto NAT | uniform_chain metric born upto NAT
           | chain_search metric born upto NAT | metrizable line born metric
           | strict_cont map line line with family,*
           | initial set with { map ":" born },*
           | generated family from family,* depth NAT
           | oracle family on set window INT ".." INT max NAT
Names must be declared before use and may not shadow keywords or built-ins.
"#;
