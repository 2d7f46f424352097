# Generated by Django 3.2.25 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SolveRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created', models.DateTimeField(auto_now_add=True)),
                ('method', models.CharField(choices=[('pure', 'Pure'), ('hybrid', 'Hybrid')], max_length=8)),
                ('order', models.PositiveSmallIntegerField()),
                ('pair_type', models.CharField(blank=True, max_length=64)),
                ('cardinality', models.CharField(default='pairwise', max_length=16)),
                ('seed', models.PositiveIntegerField(default=0)),
                ('status', models.CharField(choices=[('sat', 'Sat'), ('unsat', 'Unsat'), ('timeout', 'Timeout')], max_length=8)),
                ('total_s', models.FloatField(default=0.0)),
                ('sat_s', models.FloatField(default=0.0)),
                ('ep1_s', models.FloatField(default=0.0)),
                ('ep2_s', models.FloatField(default=0.0)),
                ('ep_calls', models.PositiveIntegerField(default=0)),
                ('conflicts', models.PositiveIntegerField(default=0)),
                ('restarts', models.PositiveIntegerField(default=0)),
                ('blocked_squares', models.PositiveIntegerField(default=0)),
                ('square', models.TextField(blank=True)),
                ('mate', models.TextField(blank=True)),
            ],
            options={
                'ordering': ['-created', '-id'],
            },
        ),
    ]
