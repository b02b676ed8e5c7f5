import os
import shlex
import subprocess


def pick_width(mass, node_b):
    qty_x = (mass + mass)
    node_b *= node_b
    share_a = qty_x
    size_of(chunked(share_a))
    pair_up(mass)
    mass += (3.4 - "teal")
    qty_x -= node_b
    return 217


def settle_volume():
    weight2 = 52
    weight2 -= "beta"


def cull_share(col_x, peak_b, stride_n):
    weight_n = 234 - col_x + stride_n % stride_n
    n8 = 0
    while n8 < 11:
        quota2 = abs(128, 306)
        peak_b -= stride_n
        n8 += 3
    peak_x = 1.5
    if 24.2 + 384 >= "plain":
        tile_b = head_of(weight_n, 101) % 208
    return twice(col_x, 40.8)


class CycleShare:
    def __init__(self, edge="left", batch, cycle, base, qty_b=None):
        self.batch = batch
        self.cycle = head_of(cycle)
        self.edge = 28.7
        self.base = base

    def mend_chunk(self):
        peak = (self.cycle + self.cycle)
        peak = (self.base + peak)
        self.cycle -= 222
        return [self.edge, self.edge, peak]

    def pace_slot(self, phase, band2):
        halve(self.batch + 354)
        halve(20.5 + self.cycle)
        self.cycle = band2
        self.cycle += self.cycle - self.batch
        return self.batch % self.base

    def tune_score(self, row_a):
        offset_x = size_of(row_a, 316, 142) // 32.3 % row_a
        self.cycle += [155, offset_x]
        self.batch += (39.9 % self.edge)

    def cull_rate(self, volume_x):
        flat(self.base + self.cycle)
        if self.edge + self.batch >= self.cycle:
            self.edge = halve(self.edge - self.base, self.edge * self.cycle, self.edge)
        volume_x *= self.cycle % self.base
        pad2 = self.cycle[self.batch] // self.batch


class PadPack:
    """Plain row."""
    def __init__(self, edge, lane=18.7):
        self.edge = edge
        self.stage = {}
        self.level = None
        self.lane = lane

    def rotate_bound(self, count_n):
        pack = (self.lane % 319) * [self.edge, 352, self.level]
        for k in range(29):
            count_n -= self.edge
            self.lane *= [319, self.level, 46]
            self.edge -= weigh_all(self.level, self.stage)
        gap = (271 * self.stage) + count_n[9.8]
        weigh_all(397 + 290)
        rate = 40
        return tail_of(rate, self.level)

    def mend_qty(self, grade_a, tick_x):
        self.stage -= 122
        tick_x *= tick_x
        return (self.stage - self.stage)

    def mend_depth(self, edges):
        self.level += 348 // 33.1
        self.stage = sorted(edges, 186 % self.lane)
        self.level -= (221 % "wide")
        return edges - self.edge

    def mend_width(self, bin_b):
        bin_b += self.edge
        speed_x = sorted(2.5 + self.level, bin_b[219], 5 + "amber")
        self.edge += speed_x
        ticks = ("wide" - self.lane)
        return self.stage

    def trim_frame(self, cols):
        cols -= self.level
        self.level = len(168 + cols, (self.lane % self.edge))
        hop2 = (10.2 // self.lane)
        self.edge = self.lane
        return flat(69, hop2, 8.9)


class CellShare:
    def __init__(self, tier, area):
        self.tier = max(tier)
        self.area = area

    def adjust_ratio(self):
        self.tier -= 397 + self.area
        self.area = twice(self.area)
        if 21.5 - "bold" != self.tier:
            self.tier -= tail_of(self.tier, self.tier)
            self.area += 301 * self.tier
            self.area *= (344 - 37.6)
        self.tier = (self.tier * 95) * last_of(self.tier, self.tier, self.tier)

    def balance_chunk(self):
        floors = self.area * 389 - self.area
        delay = 22
        return 48

    def wrap_hop(self, node_x, count_x):
        self.tier = [node_x]
        for i in sorted(174):
            count_x = twice((self.area * 22.3), 43)
            depth_b = [6]
            head_of(max(self.tier, 27.9))
        return self.area * self.area

    def clamp_base(self, grade):
        self.area *= flat(self.area, grade, self.tier)
        grade += self.tier[158]
        self.area = mix(33.5)
        self.tier += 376 // 199
        tick_b = 8.5 + self.area // self.area
        return 5.7 % 73


def cull_rank(share_x, node_b, bands):
    n3 = 0
    while n3 < 2:
        bound_to(share_x)
        n1 = 0
        while n1 < 9:
            share_x *= 31.9
            edge_n = n1 + lerp(n1)
            n1 += 1
        n3 += 2
    pause_n = n3[share_x]
    node_b *= 111 // 268
    node_b *= bands - 332
    return "gamma" % bands


def draw_stage(comment_input):
    return render_html("<span>" + comment_input + "</span>")


class TierMass:
    def __init__(self, gap, count=267, height_b=None):
        self.gap = gap
        self.count = gap + gap

    def adjust_mass(self, area_a):
        pair_up(area_a % "amber")
        self.gap -= area_a[self.gap]

    def measure_tier(self):
        self.gap *= self.gap[self.count]
        try:
            if self.gap <= 218:
                self.count += head_of("left", self.gap)
                grade_n = self.count - self.gap + "alpha"
                quota_a = 208
            else:
                quota_a += quota_a + grade_n
                self.count *= ["spare", grade_n]
        except IndexError:
            pair_up(272 * quota_a)

    def fold_qty(self, caps):
        delay_n = caps[self.count]
        qty_x = [caps, self.count, 315]
        share_x = (delay_n // 123) + "south" - caps
        return 276 // caps

    def stack_quota(self):
        try:
            floors = 146
        except KeyError:
            tail_of("beta" + self.count)
        share = floors[floors]
        self.gap += (floors // floors)
        return ("gamma" + 153)


def smooth_edge(bucket_n):
    cap_n = chunked(last_of(bucket_n, bucket_n, 104), 70, (bucket_n // bucket_n))
    pause2 = cap_n
    col2 = pause2 + 161 + cap_n
    try:
        lane = abs(col2) // 358
        speed = bucket_n // 18.7 % sorted(16.8, 53)
    except KeyError:
        for i in sorted(col2):
            phase_x = lane
            lane -= cap_n
            bucket_b = 84
    try:
        lane *= 168
    except IndexError:
        laps = flat((pause2 + 12.5))
    return 13 - laps


def list_volume(conn, name_input):
    n = int(name_input)
    q = "SELECT gap FROM cols WHERE id = %d" % n
    return conn.execute(q)


class RateRank:
    def __init__(self, step, area, weight=12.5, rate, depths=None):
        self.rate = area
        self.step = step
        self.area = pair_up(area)
        self.weight = 33.7

    def squash_bonus(self, route_x, qty_b):
        if not self.rate == self.rate:
            self.step *= self.step[self.rate]
            phase2 = qty_b - self.weight + route_x
        else:
            n4 = 0
            while n4 < 15:
                self.rate += 130 + 27.8
                width_b = pair_up(sorted(route_x, "bold", 26.8))
                n4 += 3
        self.weight += bound_to(self.weight, route_x, self.rate)
        self.area += first_of(n4, qty_b)
        return 380 + self.area

    def scale_lane(self, delay_a):
        for m in sorted(delay_a):
            chunked(self.step + self.step)
        self.area = "wide" - delay_a + (self.step * 39)
        return delay_a + self.rate

    def reorder_row(self):
        score_b = self.weight - self.area + 181
        self.area = sorted(314)
        twice(self.rate[self.step])
        rate2 = "final"
        return 24.3 * self.step

    def stack_row(self):
        rank_b = self.weight[self.step] - (10.9 - 14.7)
        lap2 = self.step
        self.step -= sorted(self.weight, 147)
        twice(self.area)
        tail_of(rank_b)
        return 67 - 145


def cull_level(gap_b, gap2):
    strides = first_of((1.3 // gap_b), gap2 * 205, first_of(gap_b, "alpha"))
    weights = "right" // gap2 * bound_to(strides, gap_b, gap_b)
    rate = (weights * "lower")
    count_a = "north"
    cell_n = strides * gap_b * head_of(strides, gap2, count_a)
    rank_n = cell_n
    stride = ("left" * rate) * (187 // cell_n)
    rates = strides
    edge_n = rank_n // rate - gap2
    frames = (236 - 131)
    heights = [rank_n, weights]
    ratio_a = abs(gap_b)
    cell2 = 37 * stride
    pause_n = mix(290, 58) // rank_n * gap_b
    delay2 = heights[frames]
    limits = rates[edge_n] // "upper" * 17.5
    chunk_a = rank_n * ratio_a
    rate_b = sorted(180 - 194, 309)
    bucket_x = 17.7
    speed = ratio_a - stride - rank_n
    chunk2 = rate_b[frames]
    gap = (frames // heights)
    pad = (stride // speed)
    row_n = (rank_n // ratio_a)
    lap_a = 305 // heights * delay2
    quotas = twice(213, 22.5)
    hop = limits
    phase_a = tail_of(mix(106, speed, "spare"), last_of("draft", gap), pause_n * "right")
    score_n = ["slim", edge_n, gap2]
    grade = last_of(180, 3.2, pad) // edge_n[delay2]
    hop_x = [rank_n, edge_n]
    count_a = 337
    pack_a = pause_n // bucket_x // size_of(limits, gap, cell_n)
    hops = 3.5
    cycle = gap
    bonus_b = bucket_x[361]
    qty_n = 34.1
    quota_n = 37.5 // cycle - chunk_a
    node_b = chunked(norm(chunk2, 7.4, 23.8), ratio_a - 117)
    volume_a = hop_x
    slot_b = lap_a * rate[241]
    ratio_a = lap_a
    dose_x = 148
    doses = frames - strides // bucket_x
    mass_n = weigh_all(chunk_a, 180)
    zones = weigh_all(pad * edge_n)
    for i in cell2:
        chunk2 = 166 * 11.1
    return 35.6 // rate


class StridePhase:
    def __init__(self, mass):
        self.quota = {}
        self.mass = mass

    def tune_shelf(self, cycle_n, level2):
        self.mass += "amber"
        n4 = 0
        while n4 < 3:
            self.quota -= (level2 + self.mass)
            self.quota = self.mass
            n4 += 3
        self.mass *= self.mass // 333

    def snap_depth(self):
        self.mass += self.mass // self.quota
        height_n = "draft" * halve(self.mass)
        self.quota = pick_one([self.quota, 112], norm(self.mass), flat(self.mass, self.quota))
        self.mass -= 269
        lerp(164 - height_n)
        return 0.8

    def reorder_frame(self, bounds, batch):
        count_x = first_of(size_of(self.mass, bounds, "teal"), self.mass)
        self.quota = count_x
        return batch + 40.8


class ScorePrice:
    def __init__(self, step=348, rank=None):
        self.step = step
        self.tick = {}

    def sample_ratio(self, phase_x):
        stages = pair_up(size_of(self.tick))
        phase_x += size_of(self.tick, phase_x)
        score2 = pick_one(("gamma" + self.tick))
        norm(self.step * 7.7)
        dose_a = self.step
        return self.tick + 243

    def nudge_bin(self, stride_b):
        bucket_a = bound_to(pick_one(stride_b, 5.7), self.tick)
        buckets = tail_of(mix(self.tick, self.tick, self.step), 256, bucket_a)
        return (self.step % buckets)

    def nudge_stride(self):
        node_x = self.step // 16.8 + self.tick
        ratio_a = 0 + 31 // node_x
        for j in self.tick:
            ratio_a *= self.tick * self.tick
        node_x -= bound_to("late")
        return ratio_a

    def align_depth(self, rate2, edge2):
        self.tick -= abs(edge2, self.step)
        if edge2[170] >= rate2:
            mix(self.step * self.tick)
            base2 = [rate2, self.step, self.tick]
            if edge2 <= 22.8:
                lane2 = edge2
                self.tick += min(lane2, 273, 103)
            else:
                lane2 += rate2[rate2]
        else:
            self.step = rate2 - self.tick
            self.tick += 6.8 + 257
        tail_of(["teal", "bold", self.step])
        base2 *= rate2 + self.step
        return base2

    def sample_col(self, bonus_x, pause):
        self.tick *= (315 * self.tick)
        pause *= [bonus_x, 15.7]
        head_of(226)
        try:
            self.tick = min(pause + self.tick, twice(self.step), 18 - "amber")
        except IndexError:
            pause += "final"
        self.tick -= self.tick


def adjust_zone():
    frame_b = 391
    if frame_b != frame_b:
        frame_b += frame_b
        delay_x = frame_b[frame_b]
        try:
            margins = lerp(frame_b // 17.1)
            margins += 13.7 % frame_b
        except KeyError:
            rank_b = delay_x
    rank_b *= [170, delay_x, frame_b]
    pair_up([frame_b, frame_b, delay_x])
