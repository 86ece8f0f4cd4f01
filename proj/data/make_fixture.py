#!/usr/bin/env python3
"""Writes the bundled desk-scale fixture.

data/desk/       scenario directory (layers, demands, resources, technologies,
                 storage, scenario.json)
data/desk_db/    background database (processes.json, a_bb.csv, b.csv, c.csv)
                 and mapping.csv

Demands and potentials follow Swiss 2020 orders of magnitude. Costs and
inventories are illustrative round numbers, not measured data.
"""

import json
import os
import sys

ROOT = os.path.dirname(os.path.abspath(__file__))
SCENARIO = os.path.join(ROOT, "desk")
DB = os.path.join(ROOT, "desk_db")

INF = "inf"

# ---------------------------------------------------------------- scenario

LAYERS = [
    ("ELEC", "GWh", "17100"),
    ("HEAT_HT", "GWh", "17300"),
    ("HEAT_LT", "GWh", "17320"),
    ("GAS", "GWh", "12020"),
    ("DIESEL", "GWh", "33360"),
    ("GASOLINE", "GWh", "33310"),
    ("WOOD", "GWh", "31230"),
    ("WET_BIOMASS", "GWh", "39990"),
    ("WASTE", "GWh", "39910"),
    ("H2", "GWh", "34210"),
    ("MOB_PASS", "Mpkm", "64110"),
    ("MOB_FREIGHT", "Mtkm", "65110"),
]

HOURS = [744, 672, 744, 720, 744, 720, 744, 744, 720, 744, 720, 744]
FLAT = [h / 8760 for h in HOURS]
SPACE_HEAT = [0.18, 0.15, 0.12, 0.08, 0.04, 0.01, 0.0, 0.0, 0.02, 0.08, 0.14, 0.18]

# layer, sector, annual, monthly shares (FLAT = constant rate)
DEMANDS = [
    ("ELEC", "households", 9818, FLAT),
    ("ELEC", "services", 10561, FLAT),
    ("ELEC", "industry", 8523, FLAT),
    ("HEAT_HT", "services", 183, FLAT),
    ("HEAT_HT", "industry", 5855, FLAT),
    ("HEAT_LT", "households", 31849, SPACE_HEAT),
    ("HEAT_LT", "services", 6994, SPACE_HEAT),
    ("HEAT_LT", "industry", 1965, SPACE_HEAT),
    ("HEAT_LT", "households", 6322, FLAT),
    ("HEAT_LT", "services", 1605, FLAT),
    ("HEAT_LT", "industry", 393, FLAT),
    ("MOB_FREIGHT", "mobility", 21106, FLAT),
    ("MOB_PASS", "mobility", 74590, FLAT),
]

# id, layer, availability [GWh/y], c_op [MCHF/GWh]
RESOURCES = [
    ("GAS_IMPORT", "GAS", INF, 0.16),
    ("DIESEL_IMPORT", "DIESEL", INF, 0.22),
    ("GASOLINE_IMPORT", "GASOLINE", INF, 0.26),
    ("WOOD", "WOOD", 15278, 0.03),
    ("WET_BIOMASS", "WET_BIOMASS", 12472, 0.025),
    ("WASTE", "WASTE", 19750, 0.0),
]

SOLAR = [0.04, 0.07, 0.11, 0.14, 0.16, 0.17, 0.18, 0.16, 0.13, 0.09, 0.05, 0.03]
WIND = [0.30, 0.28, 0.27, 0.22, 0.18, 0.15, 0.14, 0.15, 0.18, 0.24, 0.28, 0.31]
RIVER = [0.35, 0.33, 0.40, 0.50, 0.65, 0.75, 0.78, 0.72, 0.60, 0.48, 0.40, 0.36]

# id, category, conversion, c_inv, c_maint, lifetime, f_ext, f_max, capacity factor
TECHNOLOGIES = [
    ("PV", "electricity", {"ELEC": 1}, 1100, 18, 25, 2.5, 67, SOLAR),
    ("WIND", "electricity", {"ELEC": 1}, 1500, 40, 20, 0.08, 20, WIND),
    ("HYDRO_RIVER", "electricity", {"ELEC": 1}, 5500, 60, 60, 3.8, 4.65, RIVER),
    ("HYDRO_DAM", "electricity", {"ELEC": 1}, 4800, 25, 60, 8.08, 8.52, 0.25),
    ("GEOTHERMAL", "electricity", {"ELEC": 1}, 9000, 180, 30, 0, 4.8, 0.85),
    ("CCGT", "electricity", {"ELEC": 1, "GAS": -1.72}, 900, 25, 25, 0.3, 10, 0.9),
    ("WASTE_INCIN", "electricity", {"ELEC": 1, "WASTE": -4}, 5500, 150, 25, 0.4, 1.0, 0.85),
    ("HEAT_PUMP", "heat", {"HEAT_LT": 1, "ELEC": -0.33}, 1600, 30, 20, 3, 60, 1),
    ("BOILER_GAS", "heat", {"HEAT_LT": 1, "GAS": -1.11}, 250, 8, 20, 10, 60, 1),
    ("BOILER_OIL", "heat", {"HEAT_LT": 1, "DIESEL": -1.18}, 300, 10, 20, 14, 60, 1),
    ("BOILER_WOOD", "heat", {"HEAT_LT": 1, "WOOD": -1.18}, 700, 25, 20, 2, 40, 1),
    ("IND_BOILER_GAS", "heat", {"HEAT_HT": 1, "GAS": -1.09}, 180, 5, 25, 1.2, 10, 1),
    ("IND_BOILER_WOOD", "heat", {"HEAT_HT": 1, "WOOD": -1.18}, 500, 15, 25, 0.2, 10, 1),
    ("IND_ELEC_HEATER", "heat", {"HEAT_HT": 1, "ELEC": -1.02}, 150, 4, 15, 0.1, 10, 1),
    ("BIOMETHANE", "fuel", {"GAS": 1, "WET_BIOMASS": -1.8}, 1500, 70, 20, 0.1, 5, 0.9),
    ("ELECTROLYSIS", "fuel", {"H2": 1, "ELEC": -1.54}, 1100, 35, 15, 0, 10, 0.9),
    ("CAR_GASOLINE", "mobility_passenger", {"MOB_PASS": 1, "GASOLINE": -0.4375}, 7000, 350, 15, 7.0, 12, 1),
    ("CAR_BEV", "mobility_passenger", {"MOB_PASS": 1, "ELEC": -0.1125}, 8500, 300, 15, 0.1, 12, 1),
    ("TRAIN_PASS", "mobility_passenger", {"MOB_PASS": 1, "ELEC": -0.08}, 12000, 500, 40, 1.5, 3.0, 1),
    ("TRUCK_DIESEL", "mobility_freight", {"MOB_FREIGHT": 1, "DIESEL": -0.4}, 3000, 200, 12, 1.6, 4, 1),
    ("TRUCK_FC", "mobility_freight", {"MOB_FREIGHT": 1, "H2": -0.28}, 4500, 220, 12, 0, 4, 1),
    ("TRAIN_FREIGHT", "mobility_freight", {"MOB_FREIGHT": 1, "ELEC": -0.07}, 8000, 300, 40, 0.9, 1.4, 1),
    ("PHS", "electricity", {"ELEC": 1}, 120, 1.5, 50, 300, 600, 1),
    ("TES_SEASONAL", "heat", {"HEAT_LT": 1}, 1.0, 0.01, 40, 0, 10000, 1),
]

# tech, eta_charge, eta_discharge, hours
STORAGE = [
    ("PHS", 0.9, 0.9, 100),
    ("TES_SEASONAL", 0.9, 0.9, 2000),
]

REFERENCE = {
    "label": "reference_2020",
    "capacities": {t[0]: t[6] for t in TECHNOLOGIES},
}

# ---------------------------------------------------------------- database

FLOWS = ["CO2", "CH4", "NOX", "PM25", "SO2", "OIL_RES", "GAS_RES", "COAL_RES",
         "URANIUM", "WATER", "LAND", "METALS", "PHOSPHATE"]

# Remaining damage categories exclude climate and water flows.
CHARACTERIZATION = {
    "CF": {"CO2": 1000, "CH4": 29700},
    "FNEU": {"OIL_RES": 1e6, "GAS_RES": 1e6, "COAL_RES": 1e6, "URANIUM": 5.6e5},
    "REQD": {"LAND": 5000, "METALS": 20, "PHOSPHATE": 0.5, "NOX": 3, "SO2": 8},
    "RHHD": {"PM25": 0.6, "NOX": 0.02, "SO2": 0.05, "METALS": 0.002, "URANIUM": 1e-4},
    "WSF": {"WATER": 40},
    "CCHHL": {"CO2": 6e-4, "CH4": 5e-3},
    "CCHHS": {"CO2": 3e-4, "CH4": 2e-2},
    "CCEQL": {"CO2": 2.0, "CH4": 15},
    "CCEQS": {"CO2": 0.5, "CH4": 12},
    "PMF": {"PM25": 0.6, "NOX": 0.02, "SO2": 0.05},
    "PCOX": {"NOX": 1e-4},
    "HTXNCL": {"METALS": 0.002},
    "IRHH": {"URANIUM": 1e-4},
    "WAVHH": {"WATER": 1e-6},
    "TTHH": {"CO2": 9e-4, "CH4": 2.5e-2, "PM25": 0.6, "NOX": 0.02, "SO2": 0.05,
             "METALS": 0.002, "URANIUM": 1e-4, "WATER": 1e-6},
    "FWEU": {"PHOSPHATE": 0.5},
    "FWEXL": {"METALS": 20},
    "LOBDV": {"LAND": 5000},
    "TRA": {"NOX": 3, "SO2": 8},
    "WAVFWES": {"WATER": 5e-3},
    "TTEQ": {"CO2": 2.5, "CH4": 27, "LAND": 5000, "METALS": 20, "PHOSPHATE": 0.5,
             "NOX": 3, "SO2": 8, "WATER": 5e-3},
}

# id, name, unit, cpc, market, inputs {process: amount}, flows {flow: amount}
PROCESSES = [
    # materials
    ("STEEL", "steel, low-alloyed", "t", "41200", False,
     {"MKT_ELEC_CH": 0.0006}, {"CO2": 1.8, "COAL_RES": 0.02, "SO2": 0.002, "PM25": 5e-4, "WATER": 5, "METALS": 0.02}),
    ("CONCRETE", "concrete, normal", "t", "37510", False,
     {"MKT_DIESEL": 5e-5}, {"CO2": 0.12, "WATER": 0.3, "PM25": 5e-5}),
    ("COPPER", "copper, cathode", "t", "41410", False,
     {"MKT_ELEC_CH": 0.003}, {"CO2": 3.5, "SO2": 0.04, "METALS": 2.0, "WATER": 60, "LAND": 0.005}),
    ("ALUMINIUM", "aluminium, primary", "t", "41320", False,
     {"MKT_ELEC_CH": 0.015}, {"CO2": 1.7, "PM25": 0.001, "SO2": 0.01, "WATER": 20}),
    ("SILICON", "silicon, solar grade", "t", "34240", False,
     {"MKT_ELEC_CH": 0.12}, {"CO2": 60, "WATER": 200, "METALS": 0.5}),
    ("REFRIGERANT", "refrigerant R134a", "t", "34230", False,
     {"MKT_ELEC_CH": 0.005}, {"CO2": 5}),
    ("BATTERY", "battery cell, Li-ion", "t", "46410", False,
     {"MKT_ELEC_CH": 0.05, "COPPER": 0.1, "ALUMINIUM": 0.15}, {"METALS": 5, "CO2": 3, "SO2": 0.05, "WATER": 50}),
    # electricity
    ("ELEC_HYDRO", "electricity, hydro, reservoir", "GWh", "17100", False,
     {}, {"WATER": 15000, "LAND": 0.5}),
    ("ELEC_NUCLEAR", "electricity, nuclear, pressure water reactor", "GWh", "17100", False,
     {}, {"URANIUM": 20, "WATER": 2500, "CO2": 5}),
    ("ELEC_GAS", "electricity, natural gas, combined cycle", "GWh", "17100", False,
     {"MKT_GAS": 1.9}, {"CO2": 370, "NOX": 0.3}),
    ("ELEC_COAL", "electricity, hard coal", "GWh", "17100", False,
     {}, {"CO2": 950, "COAL_RES": 9.5, "SO2": 1.5, "NOX": 0.8, "PM25": 0.15, "METALS": 0.05, "WATER": 1800}),
    ("ELEC_WIND_BG", "electricity, wind, onshore", "GWh", "17100", False,
     {}, {"CO2": 10, "METALS": 0.01}),
    ("MKT_ELEC_CH", "market for electricity, low voltage", "GWh", "17100", True,
     {"ELEC_HYDRO": 0.58, "ELEC_NUCLEAR": 0.30, "MKT_ELEC_EU": 0.12}, {}),
    ("MKT_ELEC_EU", "market group for electricity, low voltage", "GWh", "17100", True,
     {"ELEC_GAS": 0.2, "ELEC_COAL": 0.2, "ELEC_NUCLEAR": 0.25, "ELEC_HYDRO": 0.15, "ELEC_WIND_BG": 0.2}, {}),
    # fuels
    ("GAS_EXTRACTION", "natural gas, high pressure, production", "GWh", "12020", False,
     {}, {"GAS_RES": 3.7, "CH4": 0.15, "CO2": 15, "NOX": 0.02, "WATER": 30}),
    ("BIOGAS_BG", "biomethane, from manure", "GWh", "12020", False,
     {}, {"CH4": 0.05, "LAND": 0.2, "PHOSPHATE": 1}),
    ("MKT_GAS", "market for natural gas, high pressure", "GWh", "12020", True,
     {"GAS_EXTRACTION": 0.97, "BIOGAS_BG": 0.03}, {}),
    ("CRUDE_OIL", "petroleum, production", "GWh", "12010", False,
     {}, {"OIL_RES": 3.8, "CO2": 20, "CH4": 0.05, "SO2": 0.01, "WATER": 30}),
    ("DIESEL_PROD", "diesel, low-sulfur, production", "GWh", "33360", False,
     {"CRUDE_OIL": 1.1, "MKT_ELEC_CH": 0.005}, {"CO2": 30, "SO2": 0.05, "NOX": 0.02}),
    ("BIODIESEL", "fatty acid methyl ester", "GWh", "33360", False,
     {}, {"LAND": 4, "PHOSPHATE": 5, "CO2": 40}),
    ("MKT_DIESEL", "market for diesel, low-sulfur", "GWh", "33360", True,
     {"DIESEL_PROD": 0.95, "BIODIESEL": 0.05}, {}),
    ("MKT_HEATING_OIL", "market for light fuel oil", "GWh", "33370", True,
     {"DIESEL_PROD": 0.9, "BIODIESEL": 0.1}, {}),
    ("GASOLINE_PROD", "petrol, low-sulfur, production", "GWh", "33310", False,
     {"CRUDE_OIL": 1.12}, {"CO2": 35, "SO2": 0.05}),
    ("ETHANOL", "ethanol, from sugar cane", "GWh", "33310", False,
     {}, {"LAND": 3, "WATER": 500, "CO2": 50}),
    ("MKT_GASOLINE", "market for petrol, low-sulfur", "GWh", "33310", True,
     {"GASOLINE_PROD": 0.95, "ETHANOL": 0.05}, {}),
    ("WOOD_CHIPS", "wood chips, from forest", "GWh", "31230", False,
     {"MKT_DIESEL": 0.01}, {"LAND": 33, "PM25": 0.005, "CO2": 8}),
    ("BIOWASTE_COLLECTION", "manure and biowaste collection", "GWh", "39990", False,
     {"MKT_DIESEL": 0.005}, {}),
    ("WASTE_COLLECTION", "municipal solid waste collection", "GWh", "39910", False,
     {"MKT_DIESEL": 0.01}, {}),
    ("LORRY", "transport, freight, lorry", "Mtkm", "65112", False,
     {"MKT_DIESEL": 0.35, "STEEL": 0.02}, {"CO2": 90, "NOX": 0.3, "PM25": 0.01}),
    # construction, per capacity unit or per vehicle
    ("PV_PLANT", "photovoltaic plant, multi-Si", "GW", "46420", False,
     {"SILICON": 4000, "ALUMINIUM": 10000, "STEEL": 40000, "COPPER": 3000, "CONCRETE": 10000,
      "MKT_ELEC_CH": 100, "LORRY": 20}, {"METALS": 500}),
    ("WIND_TURBINE", "wind turbine, 2 MW, onshore", "GW", "46410", False,
     {"STEEL": 120000, "CONCRETE": 400000, "COPPER": 2000, "ALUMINIUM": 2000, "LORRY": 50}, {"LAND": 50}),
    ("HYDRO_RIVER_PLANT", "hydropower plant, run-of-river", "GW", "53262", False,
     {"CONCRETE": 1500000, "STEEL": 60000, "COPPER": 1000, "MKT_DIESEL": 200}, {"LAND": 500}),
    ("HYDRO_DAM_PLANT", "hydropower plant, reservoir", "GW", "53262", False,
     {"CONCRETE": 3000000, "STEEL": 50000, "MKT_DIESEL": 300}, {"LAND": 2000}),
    ("GEOTHERMAL_PLANT", "geothermal power plant, deep well", "GW", "53262", False,
     {"STEEL": 200000, "CONCRETE": 300000, "MKT_DIESEL": 2000, "COPPER": 2000}, {"WATER": 1e6, "METALS": 200}),
    ("GAS_TURBINE_PLANT", "gas power plant, combined cycle", "GW", "53262", False,
     {"STEEL": 30000, "CONCRETE": 100000, "COPPER": 1500}, {}),
    ("WASTE_PLANT", "municipal waste incineration plant", "GW", "53262", False,
     {"STEEL": 150000, "CONCRETE": 400000}, {}),
    ("HEAT_PUMP_UNIT", "heat pump, brine-water", "GW", "43912", False,
     {"STEEL": 15000, "COPPER": 3000, "ALUMINIUM": 2000, "REFRIGERANT": 300, "MKT_ELEC_CH": 20}, {}),
    ("BOILER_UNIT", "boiler, condensing", "GW", "43911", False,
     {"STEEL": 15000, "COPPER": 200}, {}),
    ("IND_BOILER_UNIT", "industrial furnace", "GW", "43911", False,
     {"STEEL": 10000, "CONCRETE": 5000}, {}),
    ("ELEC_HEATER_UNIT", "electric process heater", "GW", "43911", False,
     {"STEEL": 3000, "COPPER": 500}, {}),
    ("DIGESTER", "anaerobic digestion plant", "GW", "53262", False,
     {"CONCRETE": 150000, "STEEL": 20000}, {}),
    ("ELECTROLYSER", "electrolyser, PEM", "GW", "43914", False,
     {"STEEL": 10000, "ALUMINIUM": 500, "COPPER": 800, "MKT_ELEC_CH": 10}, {"METALS": 50}),
    ("CAR_ICE", "passenger car, petrol", "unit", "49112", False,
     {"STEEL": 0.9, "ALUMINIUM": 0.15, "COPPER": 0.02, "MKT_ELEC_CH": 0.003}, {"CO2": 1.5}),
    ("CAR_ELECTRIC", "passenger car, electric", "unit", "49112", False,
     {"STEEL": 0.8, "ALUMINIUM": 0.2, "COPPER": 0.06, "BATTERY": 0.35, "MKT_ELEC_CH": 0.004}, {"CO2": 1.2}),
    ("LORRY_UNIT", "lorry, 40 t", "unit", "49114", False,
     {"STEEL": 8, "ALUMINIUM": 1, "COPPER": 0.1}, {"CO2": 5}),
    ("LORRY_FC_UNIT", "lorry, fuel cell", "unit", "49114", False,
     {"STEEL": 7, "ALUMINIUM": 2, "COPPER": 0.3, "BATTERY": 0.5}, {"METALS": 0.5, "CO2": 5}),
    ("TRAIN_UNIT", "train, electric", "unit", "49520", False,
     {"STEEL": 150, "COPPER": 5, "ALUMINIUM": 20}, {"CO2": 100}),
    ("PHS_PLANT", "pumped storage plant", "GWh", "53262", False,
     {"CONCRETE": 20000, "STEEL": 1000}, {"LAND": 20}),
    ("TES_PIT", "seasonal pit thermal storage", "GWh", "53262", False,
     {"STEEL": 50, "CONCRETE": 500}, {"LAND": 1}),
    # operation, per GWh of output or per vehicle/tonne distance
    ("PV_OP", "electricity, photovoltaic, operation", "GWh", "17100", False, {}, {"WATER": 10}),
    ("WIND_OP", "electricity, wind, operation", "GWh", "17100", False, {}, {"METALS": 0.01}),
    ("HYDRO_RIVER_OP", "electricity, run-of-river, operation", "GWh", "17100", False,
     {}, {"WATER": 50, "LAND": 1}),
    ("HYDRO_DAM_OP", "electricity, reservoir, operation", "GWh", "17100", False,
     {}, {"WATER": 20000, "LAND": 20}),
    ("GEOTHERMAL_OP", "electricity, geothermal, operation", "GWh", "17100", False,
     {}, {"WATER": 3000, "CO2": 5, "SO2": 0.01, "METALS": 0.5}),
    ("CCGT_OP", "electricity, combined cycle, operation", "GWh", "17100", False,
     {"MKT_GAS": 1.72}, {"CO2": 350, "NOX": 0.2, "WATER": 700}),
    ("WASTE_INCIN_OP", "electricity, waste incineration, operation", "GWh", "17100", False,
     {"WASTE_COLLECTION": 4}, {"CO2": 500, "NOX": 0.6, "METALS": 1, "PM25": 0.01, "SO2": 0.05}),
    ("HEAT_PUMP_OP", "heat, heat pump, operation", "GWh", "17320", False,
     {"MKT_ELEC_CH": 0.33}, {"CO2": 2}),
    ("BOILER_GAS_OP", "heat, gas boiler, operation", "GWh", "17320", False,
     {"MKT_GAS": 1.11}, {"CO2": 202, "NOX": 0.04, "CH4": 0.002}),
    ("BOILER_OIL_OP", "heat, oil boiler, operation", "GWh", "17320", False,
     {"MKT_HEATING_OIL": 1.18}, {"CO2": 270, "NOX": 0.15, "SO2": 0.03, "PM25": 0.002}),
    ("BOILER_WOOD_OP", "heat, wood chips furnace, operation", "GWh", "17320", False,
     {"WOOD_CHIPS": 1.18}, {"PM25": 0.08, "NOX": 0.4, "CH4": 0.01, "METALS": 0.2}),
    ("IND_GAS_OP", "process heat, natural gas, operation", "GWh", "17300", False,
     {"MKT_GAS": 1.09}, {"CO2": 200, "NOX": 0.05}),
    ("IND_WOOD_OP", "process heat, wood chips, operation", "GWh", "17300", False,
     {"WOOD_CHIPS": 1.18}, {"PM25": 0.03, "NOX": 0.3}),
    ("IND_ELEC_OP", "process heat, electric, operation", "GWh", "17300", False,
     {"MKT_ELEC_CH": 1.02}, {}),
    ("BIOMETHANE_OP", "biomethane upgrading, operation", "GWh", "12020", False,
     {"BIOWASTE_COLLECTION": 1.8, "MKT_ELEC_CH": 0.05}, {"CH4": 0.2, "PHOSPHATE": 2, "NOX": 0.05}),
    ("CAR_ICE_OP", "transport, passenger car, petrol", "Mvkm", "64110", False,
     {"MKT_GASOLINE": 0.7}, {"CO2": 170, "NOX": 0.04, "PM25": 0.005, "METALS": 0.1}),
    ("CAR_ELECTRIC_OP", "transport, passenger car, electric", "Mvkm", "64110", False,
     {"MKT_ELEC_CH": 0.18}, {"PM25": 0.004, "METALS": 0.1}),
    ("TRAIN_PASS_OP", "transport, passenger train", "Mpkm", "64110", False,
     {"MKT_ELEC_CH": 0.08}, {"METALS": 0.05, "PM25": 0.001}),
    ("TRUCK_DIESEL_OP", "transport, freight lorry, diesel, operation", "Mtkm", "65110", False,
     {"MKT_DIESEL": 0.4}, {"CO2": 105, "NOX": 0.4, "PM25": 0.01, "METALS": 0.05}),
    ("TRUCK_FC_OP", "transport, freight lorry, fuel cell, operation", "Mtkm", "65110", False,
     {}, {"PM25": 0.005, "METALS": 0.05}),
    ("TRAIN_FREIGHT_OP", "transport, freight train", "Mtkm", "65110", False,
     {"MKT_ELEC_CH": 0.07}, {"METALS": 0.03}),
    ("PHS_OP", "electricity, pumped storage, operation", "GWh", "17100", False,
     {}, {"WATER": 500}),
]

CARS_PER_CAPACITY = 365000     # cars per Mpkm/h at 24000 pkm per car and year
LORRIES_PER_CAPACITY = 11000   # lorries per Mtkm/h
TRAINS_PER_PASS_CAPACITY = 500
TRAINS_PER_FREIGHT_CAPACITY = 400
OCCUPANCY = 1.6                # passengers per vehicle

# entity, phase, process ("" = no inventory), factor
MAPPING = [
    ("PV", "construction", "PV_PLANT", 1), ("PV", "operation", "PV_OP", 1),
    ("WIND", "construction", "WIND_TURBINE", 1), ("WIND", "operation", "WIND_OP", 1),
    ("HYDRO_RIVER", "construction", "HYDRO_RIVER_PLANT", 1), ("HYDRO_RIVER", "operation", "HYDRO_RIVER_OP", 1),
    ("HYDRO_DAM", "construction", "HYDRO_DAM_PLANT", 1), ("HYDRO_DAM", "operation", "HYDRO_DAM_OP", 1),
    ("GEOTHERMAL", "construction", "GEOTHERMAL_PLANT", 1), ("GEOTHERMAL", "operation", "GEOTHERMAL_OP", 1),
    ("CCGT", "construction", "GAS_TURBINE_PLANT", 1), ("CCGT", "operation", "CCGT_OP", 1),
    ("WASTE_INCIN", "construction", "WASTE_PLANT", 1), ("WASTE_INCIN", "operation", "WASTE_INCIN_OP", 1),
    ("HEAT_PUMP", "construction", "HEAT_PUMP_UNIT", 1), ("HEAT_PUMP", "operation", "HEAT_PUMP_OP", 1),
    ("BOILER_GAS", "construction", "BOILER_UNIT", 1), ("BOILER_GAS", "operation", "BOILER_GAS_OP", 1),
    ("BOILER_OIL", "construction", "BOILER_UNIT", 1), ("BOILER_OIL", "operation", "BOILER_OIL_OP", 1),
    ("BOILER_WOOD", "construction", "BOILER_UNIT", 1.5), ("BOILER_WOOD", "operation", "BOILER_WOOD_OP", 1),
    ("IND_BOILER_GAS", "construction", "IND_BOILER_UNIT", 1), ("IND_BOILER_GAS", "operation", "IND_GAS_OP", 1),
    ("IND_BOILER_WOOD", "construction", "IND_BOILER_UNIT", 1.5), ("IND_BOILER_WOOD", "operation", "IND_WOOD_OP", 1),
    ("IND_ELEC_HEATER", "construction", "ELEC_HEATER_UNIT", 1), ("IND_ELEC_HEATER", "operation", "IND_ELEC_OP", 1),
    ("BIOMETHANE", "construction", "DIGESTER", 1), ("BIOMETHANE", "operation", "BIOMETHANE_OP", 1),
    ("ELECTROLYSIS", "construction", "ELECTROLYSER", 1), ("ELECTROLYSIS", "operation", "", 1),
    ("CAR_GASOLINE", "construction", "CAR_ICE", CARS_PER_CAPACITY),
    ("CAR_GASOLINE", "operation", "CAR_ICE_OP", 1 / OCCUPANCY),
    ("CAR_BEV", "construction", "CAR_ELECTRIC", CARS_PER_CAPACITY),
    ("CAR_BEV", "operation", "CAR_ELECTRIC_OP", 1 / OCCUPANCY),
    ("TRAIN_PASS", "construction", "TRAIN_UNIT", TRAINS_PER_PASS_CAPACITY),
    ("TRAIN_PASS", "operation", "TRAIN_PASS_OP", 1),
    ("TRUCK_DIESEL", "construction", "LORRY_UNIT", LORRIES_PER_CAPACITY),
    ("TRUCK_DIESEL", "operation", "TRUCK_DIESEL_OP", 1),
    ("TRUCK_FC", "construction", "LORRY_FC_UNIT", LORRIES_PER_CAPACITY),
    ("TRUCK_FC", "operation", "TRUCK_FC_OP", 1),
    ("TRAIN_FREIGHT", "construction", "TRAIN_UNIT", TRAINS_PER_FREIGHT_CAPACITY),
    ("TRAIN_FREIGHT", "operation", "TRAIN_FREIGHT_OP", 1),
    ("PHS", "construction", "PHS_PLANT", 1), ("PHS", "operation", "PHS_OP", 1),
    ("TES_SEASONAL", "construction", "TES_PIT", 1), ("TES_SEASONAL", "operation", "", 1),
    ("GAS_IMPORT", "operation", "MKT_GAS", 1),
    ("DIESEL_IMPORT", "operation", "MKT_DIESEL", 1),
    ("GASOLINE_IMPORT", "operation", "MKT_GASOLINE", 1),
    ("WOOD", "operation", "WOOD_CHIPS", 1),
    ("WET_BIOMASS", "operation", "BIOWASTE_COLLECTION", 1),
    ("WASTE", "operation", "", 1),
]


def num(v):
    if isinstance(v, str):
        return v
    return repr(float(v)) if not float(v).is_integer() else str(int(v)) if abs(v) < 1e15 else repr(float(v))


def monthly(v):
    return ";".join(num(x) for x in v) if isinstance(v, list) else num(v)


def write(path, lines):
    with open(path, "w", newline="\n") as f:
        f.write("\n".join(lines) + "\n")


def scenario():
    os.makedirs(SCENARIO, exist_ok=True)
    write(os.path.join(SCENARIO, "layers.csv"),
          ["id,unit,cpc"] + [f"{i},{u},{c}" for i, u, c in LAYERS])
    months = ",".join(f"m{m:02d}" for m in range(1, 13))
    rows = [f"layer,sector,annual,{months}"]
    for layer, sector, annual, shares in DEMANDS:
        tail = ",".join(num(s) for s in shares) if shares else "," * 11
        rows.append(f"{layer},{sector},{num(annual)},{tail}")
    write(os.path.join(SCENARIO, "demands.csv"), rows)
    write(os.path.join(SCENARIO, "resources.csv"),
          ["id,layer,availability,c_op"] + [f"{i},{l},{num(a)},{num(c)}" for i, l, a, c in RESOURCES])
    rows = ["id,category,conversion,c_inv,c_maint,lifetime,f_ext,f_min,f_max,capacity_factor"]
    for tid, cat, conv, cinv, cmaint, life, fext, fmax, cf in TECHNOLOGIES:
        conversion = ";".join(f"{k}:{num(v)}" for k, v in conv.items())
        rows.append(f"{tid},{cat},{conversion},{num(cinv)},{num(cmaint)},{num(life)},{num(fext)},0,{num(fmax)},"
                    f"{monthly(cf)}")
    write(os.path.join(SCENARIO, "technologies.csv"), rows)
    write(os.path.join(SCENARIO, "storage.csv"),
          ["tech,eta_charge,eta_discharge,hours"] + [f"{t},{num(a)},{num(b)},{num(h)}" for t, a, b, h in STORAGE])
    with open(os.path.join(SCENARIO, "scenario.json"), "w", newline="\n") as f:
        json.dump({"discount_rate": 0.015, "reference": REFERENCE}, f, indent=2)
        f.write("\n")


def database():
    os.makedirs(DB, exist_ok=True)
    ids = [p[0] for p in PROCESSES]
    for p in PROCESSES:
        for inp in p[5]:
            if inp not in ids:
                sys.exit(f"{p[0]}: unknown input {inp}")
        for fl in p[6]:
            if fl not in FLOWS:
                sys.exit(f"{p[0]}: unknown flow {fl}")
    with open(os.path.join(DB, "processes.json"), "w", newline="\n") as f:
        json.dump({"processes": [{"id": p[0], "name": p[1], "unit": p[2], "cpc": p[3], "market": p[4]}
                                 for p in PROCESSES],
                   "flows": FLOWS}, f, indent=2)
        f.write("\n")
    a = ["row_process,col_process,amount"]
    b = ["flow,process,amount"]
    for p in PROCESSES:
        for inp, amount in p[5].items():
            a.append(f"{inp},{p[0]},{num(-amount)}")
        for fl, amount in p[6].items():
            b.append(f"{fl},{p[0]},{num(amount)}")
    write(os.path.join(DB, "a_bb.csv"), a)
    write(os.path.join(DB, "b.csv"), b)
    c = ["indicator,flow,factor"]
    for ind, factors in CHARACTERIZATION.items():
        for fl, v in factors.items():
            c.append(f"{ind},{fl},{num(v)}")
    write(os.path.join(DB, "c.csv"), c)
    write(os.path.join(DB, "mapping.csv"),
          ["entity,phase,process,factor"] + [f"{e},{ph},{p},{num(f)}" for e, ph, p, f in MAPPING])


if __name__ == "__main__":
    scenario()
    database()
