# Generated by Django 5.2.8

import django.core.validators
import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='BenchmarkRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('trials', models.PositiveIntegerField(validators=[django.core.validators.MinValueValidator(1)])),
                ('base_seed', models.PositiveBigIntegerField(default=0)),
                ('algorithms', models.CharField(help_text="Comma-separated algorithm ids, e.g. 'bos,dc,hybrid'.", max_length=64)),
                ('switch_enabled', models.BooleanField(default=True)),
                ('c_left', models.FloatField(default=1.0)),
                ('c_right', models.FloatField(default=150.0)),
                ('exponent', models.FloatField(default=0.9)),
                ('offset', models.FloatField(default=1.5)),
                ('d_interpretation', models.CharField(choices=[('m', 'subproblem'), ('M', 'original')], default='m', max_length=1)),
                ('note', models.CharField(blank=True, max_length=200)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='TimingResult',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n_points', models.PositiveIntegerField()),
                ('n_objectives', models.PositiveSmallIntegerField(validators=[django.core.validators.MinValueValidator(2)])),
                ('n_levels', models.PositiveSmallIntegerField()),
                ('trial', models.PositiveIntegerField()),
                ('algorithm', models.CharField(choices=[('naive', 'Naive (definition)'), ('bos', 'Best Order Sort'), ('dc', 'Divide-and-conquer'), ('hybrid', 'Hybrid')], max_length=16)),
                ('time_ns', models.PositiveBigIntegerField()),
                ('checksum', models.CharField(max_length=16)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='timings', to='benchmarks.benchmarkrun')),
            ],
            options={
                'ordering': ['n_points', 'n_objectives', 'n_levels', 'trial', 'algorithm'],
            },
        ),
        migrations.AddIndex(
            model_name='timingresult',
            index=models.Index(fields=['run', 'n_points', 'n_objectives', 'n_levels'], name='benchmarks__run_id_631809_idx'),
        ),
        migrations.AddIndex(
            model_name='timingresult',
            index=models.Index(fields=['algorithm'], name='benchmarks__algorit_7c1dd8_idx'),
        ),
        migrations.AlterUniqueTogether(
            name='timingresult',
            unique_together={('run', 'n_points', 'n_objectives', 'n_levels', 'trial', 'algorithm')},
        ),
    ]
