"""Pure-Python candidate search over row bitsets (Python ints).

Same contract as the compiled ``_kernels.mine_best``; see engine.py for the
meaning of each argument.
"""


def mine_best(hold, gen, pos_start, groups, agrees, n_rows, min_fired, cap,
              conf_num, conf_den, mode_dataset):
    results = []
    visited = 0
    n_pos = len(pos_start) - 1
    full = (1 << n_rows) - 1
    combo = []

    for h, (group, agree) in enumerate(zip(groups, agrees)):
        n_agree = agree.bit_count()
        if n_agree == 0:
            continue

        def dfs(next_pos, cover, fired):
            nonlocal visited
            depth = len(combo) + 1
            for p in range(next_pos, n_pos):
                for a in range(pos_start[p], pos_start[p + 1]):
                    c2 = cover & gen[a]
                    if not c2:
                        continue
                    f2 = fired & hold[a]
                    nf = f2.bit_count()
                    if nf < min_fired:
                        continue
                    visited += 1
                    nc = (f2 & agree).bit_count()
                    base = n_rows if mode_dataset else nf
                    combo.append(a)
                    if nc * conf_den > conf_num * base and nc * n_rows > nf * n_agree:
                        results.append((h, tuple(combo), nf, nc))
                    if depth < cap:
                        dfs(p + 1, c2, f2)
                    combo.pop()

        dfs(0, group, full)
    return results, visited
