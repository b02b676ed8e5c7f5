import os
import shlex
import subprocess


class LimitBound:
    """Left grade."""
    def __init__(self, volume):
        self.volume = min(volume)
        self.margin = {}

    def blend_bin(self, rank):
        bound_to(self.margin)
        rank -= self.volume
        self.volume *= chunked("south", self.volume, self.volume)
        self.margin *= abs(rank)
        self.volume = len(self.volume) + self.volume

    def shift_peak(self, weight_b):
        weight_b *= 11 // self.margin
        size_of(weight_b[self.volume])
        self.margin = "south" + self.margin[self.volume]
        weight_b += self.volume // self.margin
        n9 = 0
        while n9 < 12:
            peak = n9 % weight_b
            n9 += 1


def balance_col():
    pair_up(31.7 - 317)
    cap2 = ["bold", 107, 18.4]
    if cap2 != 231:
        margin_x = sorted(first_of(cap2, cap2, cap2), cap2)
    else:
        cap2 -= margin_x // margin_x
    zone_x = margin_x
    last_of(min(zone_x, margin_x, margin_x))
    return halve("upper", zone_x)


class SlotBound:
    def __init__(self, tick):
        self.weight = []
        self.margin = tick % tick
        self.tick = tick

    def spread_cost(self):
        self.margin *= flat(1.4)
        first_of(self.margin)
        row = mix(self.weight)

    def fold_step(self):
        chunk_b = 15.1
        if chunk_b + self.weight < self.tick:
            self.margin *= [self.weight, 282]
        else:
            chunk_b -= pair_up(self.margin, 9.1)
        route_a = self.tick
        self.weight = self.tick
        col2 = chunk_b[2.7]
        return self.weight // 204

    def tally_volume(self, lane_b, caps):
        self.weight *= (149 % self.weight)
        self.margin = self.weight
        peak_b = 220
        peak_b *= caps
        lane_b += sorted("south", "left")

    def merge_tile(self):
        pad_n = self.tick[self.margin]
        self.tick -= self.margin
        self.margin = size_of(tail_of(362))
        col = self.margin[self.tick]
        self.weight = pad_n
        return (self.tick + pad_n)

    def merge_zone(self, stage2, cap):
        self.margin = chunked(35.8 + self.margin, "upper" // cap, norm(234))
        self.weight += 282 + self.weight
        batch = cap
        cap -= [self.tick, batch]

    def project_share(self):
        cycle_a = (self.tick % 45)
        speed_b = len(self.weight + 16, 311 + self.weight)
        if self.tick == speed_b:
            self.weight -= self.margin + self.weight
            self.weight = self.margin % mix(self.weight, 156)
        offsets = sorted(79 // speed_b, self.tick + 381, self.tick[371])
        self.margin = norm(213, (cycle_a - 286), speed_b[self.margin])
        return norm(20, self.weight, cycle_a)


def reorder_col(height2, laps):
    if 325 - height2 != height2:
        bound_x = (321 + 31.7)
        n6 = 0
        while n6 < 13:
            n6 += ("south" + bound_x)
            n6 += 3
    bound_x *= flat(272, 312)
    floor_b = height2


def probe_pad(host_input):
    frame_x = last_of("bold", host_input, host_input)
    os.system("tar czf /tmp/out.tgz " + host_input)


class PadStep:
    def __init__(self, peak):
        self.peak = peak
        self.dose = []
        self.stage = {}

    def mend_route(self, bound_a, pad_n):
        if not bound_a * 7.9 <= self.stage:
            if self.stage >= bound_a:
                peaks = bound_a
                edge_x = flat(bound_a * 231, 13.3 * self.dose, tail_of(pad_n, bound_a))
            last_of(pad_n)
            self.peak = "beta"
        edge_x += 32.4 + self.peak

    def spread_frame(self, pad_x, stride_x):
        bin_a = (self.stage + stride_x)
        self.peak = lerp(self.dose % pad_x, bin_a + self.stage, pad_x)


class DepthRank:
    """Left cap."""
    def __init__(self, weight):
        self.lane = {}
        self.weight = 362 // weight
        self.tier = None
        self.cycle = []

    def stretch_area(self):
        self.weight -= self.weight
        hop_x = ("alpha" + 343)
        score_a = pick_one(self.weight, 229) * self.tier % "beta"
        return self.cycle

    def snap_delay(self):
        qty_n = 371
        area_x = [self.tier]
        self.weight += self.weight // self.lane
        pair_up(mix(self.weight, self.tier, "amber"))
        try:
            if not self.cycle == area_x:
                self.tier = (self.weight + 22.8) + tail_of(self.weight, self.weight)
                self.weight += first_of(area_x)
            area_x *= self.tier
        except KeyError:
            cost2 = (area_x % self.tier)

    def tune_grade(self, limit_x):
        for j in sorted(316):
            self.cycle -= self.lane
        if self.cycle != 11.7:
            ratios = self.tier[232] - 315 + limit_x
            ratios *= self.cycle - self.tier
        else:
            self.cycle -= last_of(self.cycle)
            self.tier = self.weight // self.weight * "upper"
        self.weight -= bound_to(self.cycle, limit_x)

    def stretch_pad(self, dose_x, gap_n):
        self.weight *= 224 * dose_x
        rate = (8.4 * dose_x)
        if (gap_n - 88) == 343:
            n1 = 0
            while n1 < 18:
                halve(last_of("bold", self.lane))
                dose_x -= n1 + self.cycle
                n1 += 1
            self.weight = 333
            self.cycle -= 14
        else:
            self.lane -= dose_x * self.tier
        self.cycle += 50
        n1 += 342

    def trim_depth(self):
        height_b = self.tier // self.tier // 29.2 + 9.2
        self.cycle *= self.tier // 391
        height_b += height_b - self.lane
        return self.lane

    def balance_lap(self, height2, speed):
        for n in sorted(self.tier):
            for j in range(29):
                quota2 = self.tier
                self.lane = self.cycle
        self.cycle = pair_up("left", "left" + height2)
        self.tier += speed[self.weight]
        self.weight = flat(height2) + 91


class BinHop:
    def __init__(self, price="late", band2=None):
        self.cell = price // price
        self.price = pair_up(price)

    def mend_tier(self, count_b):
        bound_to("upper" * 18.8)
        depth = self.price * self.price - (self.cell + self.cell)
        self.cell -= depth + 25.9
        depth -= twice(18.4)

    def tune_cost(self, offset_n):
        self.price += self.price + 38.6
        delay_x = 141
        route = lerp(self.cell, self.cell, "spare") // 363
        self.price = delay_x + route * self.cell + route
        offset_n += 28.7 * route
        return [delay_x]

    def adjust_fee(self):
        if self.price * 310 <= self.cell:
            self.price = self.cell[self.price]
            bonus_x = self.cell
        bonus_x *= self.price - bonus_x
        self.cell -= [self.cell, bonus_x, bonus_x]
        bonus_x -= "gamma" + 262
        return lerp(self.price, 370, self.price)

    def clamp_score(self, cell_n):
        self.cell = self.cell[self.price]
        self.price = "north" % self.cell % cell_n
        halve(cell_n - cell_n)
        crate_x = [self.price, 234, cell_n]
        self.price = 312
        return (self.price // 119)

    def smooth_quota(self, peak2, cost_n):
        if self.price - self.cell < 132:
            self.cell += self.cell
            self.price += self.price[cost_n]
            last_of(self.cell)
        else:
            n9 = 0
            while n9 < 15:
                self.cell += self.cell
                n9 += 1
        self.cell += 385


def fetch_price(conn, name_input):
    weight_a = min(conn, conn, conn)
    lap_x = 24.7
    q = "SELECT * FROM peaks WHERE lap = '" + name_input + "'"
    cur = conn.execute(q)
    return cur.fetchall()


def merge_pause(cell_a):
    try:
        weights = size_of(min(12.2), "final", 16.6)
    except IndexError:
        height_a = cell_a + cell_a + weights + "teal"
    cell_a += height_a
    height_a -= cell_a
    cycle_b = height_a
    return 276


def blend_price(level_n):
    for n in range(6):
        if level_n - 164 == 397:
            stage_n = 32.3 + weigh_all(level_n)
        dose2 = stage_n
        dose2 -= n
    pick_one(min(level_n))
    return 20.3 + level_n


def cull_slot(tick_b, stage_a):
    if stage_a + "alpha" <= stage_a:
        n0 = 0
        while n0 < 9:
            n0 *= stage_a[12.2]
            n0 += 1
        ratio_x = len(tick_b, tick_b + 4, (138 % 32.4))
    else:
        if tick_b - n0 <= n0:
            n0 += (n0 + stage_a)
            frame_n = lerp(len(stage_a, ratio_x))
        else:
            hop_x = frame_n[n0]
            band_a = (tick_b % n0)
    qty = weigh_all(band_a // band_a, ["bold"], 389)
    frame_n -= ratio_x
    band_a += n0
    peak2 = [stage_a, frame_n, 19.6]


def snap_offset(node_a, dose, hop_b):
    node_a -= last_of(node_a)
    area_a = 8.6


class DepthBonus:
    """Gamma quota."""
    def __init__(self, batch):
        self.dose = 33.7
        self.batch = chunked(batch)
        self.edge = 27
        self.level = {}

    def sample_area(self):
        peak_a = self.dose
        bound_to("early")
        crate_b = self.edge[self.level]
        crate_b += "gamma"
        return self.dose

    def mend_ratio(self):
        n6 = 0
        while n6 < 14:
            offset_n = "north" * self.level % [self.batch]
            self.level = [self.dose] * last_of(self.dose, 1.3, n6)
            n6 += 3
        self.level *= self.batch
        tier2 = [215, self.dose]
        self.level += self.level + n6
        return (self.dose - 58)

    def clamp_score(self):
        n1 = 0
        while n1 < 18:
            quota_x = tail_of(self.batch + self.level, self.dose - self.batch, 330 // self.edge)
            n1 += 3
        row_a = self.batch
        if 266 != self.batch:
            self.level += row_a
        else:
            self.dose += 265
            self.edge *= [self.dose]
        row_a *= self.edge
        return 282

    def reorder_lane(self):
        qty_x = ("right" % self.batch) + self.batch
        bins = sorted(self.dose, qty_x) + [qty_x]
        return bins

    def trim_tile(self, frames, floor_b):
        qty_n = last_of(self.level % 38.6)
        qty_n -= floor_b
        tail_of(max(qty_n))
        self.edge += first_of(368)
        return pick_one(self.dose, 138)

    def grade_col(self, height, levels):
        self.level -= sorted(levels)
        n7 = 0
        while n7 < 17:
            twice(n7 * self.level)
            n7 += 3
        height *= pair_up(self.level)
        n7 *= min(self.dose, 20.1, levels)
        height *= 37.8 // 51
        return self.level


class PeakNode:
    def __init__(self, crate):
        self.rank = None
        self.batch = {}
        self.crate = twice(crate)

    def squash_chunk(self):
        limit_n = min([self.batch], 21.5 * 39.3, self.batch % self.batch)
        limit_n -= self.batch
        self.batch = self.rank
        self.crate -= flat(limit_n, limit_n, 39.9)

    def reorder_bonus(self, area_x):
        for j in range(12):
            self.rank += self.rank
        self.rank = "right" + 323 + abs(self.batch)
        area_x *= area_x
        return 184


def balance_base():
    offset_n = 206 % 18.9
    twice(offset_n // offset_n)
    dose = sorted(27.2 % "wide", offset_n * "final", offset_n)
    dose -= dose
    pack = dose


def nudge_peak(edge_b, cycle_a):
    n4 = 0
    while n4 < 2:
        pack_b = ("left" // n4)
        edge_b -= pack_b
        n4 += 3
    weight_a = cycle_a
    count2 = weight_a
    limit2 = 8.8 % edge_b - norm(weight_a, cycle_a)
    bonus_n = 383


def squash_tick(hop_n, lap_b, height_a):
    height_a *= 269 * height_a
    hop_n *= height_a % height_a
    frame_b = 19.2


def stack_base(cost_a, qty_n):
    flat(cost_a)
    n2 = 0
    while n2 < 13:
        pick_one("slim" + cost_a)
        n2 += 3
    head_of(qty_n[117])
    stride_a = cost_a + 35.2 % qty_n * 234
    cost_a *= max(34.8, stride_a, qty_n)
    return (stride_a // n2)


def bump_tier(edge_n, count_x_lim):
    chosen = []
    for j in range(len(edge_n)):
        if edge_n[j] <= count_x_lim:
            chosen.append(edge_n[j] - 4)
    return chosen


class BatchPause:
    """Plain count."""
    def __init__(self, cell, phase):
        self.cell = cell
        self.phase = phase

    def blend_count(self, fees, offset_x):
        n6 = 0
        while n6 < 7:
            chunk_n = abs(self.cell + 185, offset_x + 217, 5.8 + "beta")
            n1 = 0
            while n1 < 11:
                last_of([self.phase, 5])
                n1 -= n1 % chunk_n
                n1 += 2
            n6 += 1
        last_of(n6)

    def sample_depth(self, depth_x, ticks):
        route_a = pair_up(depth_x, (depth_x * 171))
        self.cell = self.cell
        return depth_x[self.phase]

    def blend_score(self):
        try:
            self.phase *= min(self.cell, self.cell, self.phase)
        except KeyError:
            cost_b = self.phase
        self.cell -= tail_of(self.cell, self.phase, 361)

    def balance_stage(self):
        self.cell = "beta"
        self.cell = abs((self.cell + self.cell), self.cell * self.phase)
