"""Frozen reference values from an independent mpmath oracle (scripts/derive_oracles.py).

The oracle rebuilds every coefficient sequence from its closed-form definition
and solves with mpmath.findroot at 50 significant digits; nothing here comes
from the package itself.
"""

BETA_G = {
    1: "1.4655712318767680267", 2: "1.8392867552141611326", 3: "2",
    4: "2.6589670819169940793", 5: "2.9196395658394181451", 6: "3",
    7: "3.74734654030721085", 8: "3.951373035591441433", 9: "4",
    10: "4.798845098486520348", 11: "4.967365141396024351", 12: "5",
}

BETA_C = {
    1: "1.5535615059135872904", 2: "1.9198781880008138326", 3: "2.4046163510986976637",
    4: "2.7223565206580188706", 5: "2.9736896343175701824", 6: "3.5586896908687111152",
    7: "3.7882627774498866448", 8: "3.9879889056691588748", 9: "4.6445755531696710655",
    10: "4.8271674274296499066", 11: "4.9935234937709425552", 12: "5.7009853233545584073",
}

# beta_n for M = 1, delta(beta_n) = t_n^infinity
BETA_N_1 = {
    0: "1.4655712318767680267", 1: "1.5384965922131477404", 2: "1.5526338459878538114",
    3: "1.5535568772419176846", 4: "1.5535615057951392744",
}

# hat beta_k, delta = lambda[:L] (lambda[L:2L])^infinity with L = 3 * 2^k
BETA_HAT = {
    (1, 0): "1.5589798779817507996", (1, 1): "1.5536322569871044366",
    (1, 2): "1.5535615294474891509", (1, 3): "1.5535615059135903219",
    (2, 0): "1.9212896099952392302", (2, 1): "1.9198815482348503216",
    (2, 2): "1.9198781880270268896",
}

# the published five-decimal table (M = 1..10)
PRINTED_TABLE_G = ["1.46557", "1.83929", "2.00000", "2.65897", "2.91964",
                 "3.00000", "3.74735", "3.95137", "4.00000", "4.79885"]
PRINTED_TABLE_C = ["1.55356", "1.91988", "2.40462", "2.72236", "2.97737",
                 "3.55447", "3.78826", "3.98799", "4.64302", "4.82717"]
